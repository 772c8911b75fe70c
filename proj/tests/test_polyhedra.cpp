#include <doctest.h>

#include "rothcoss/polyhedra.hpp"

using namespace rothcoss;

namespace {
RadicalExpr E(const char* text) { return RadicalExpr::parse(text); }
}  // namespace

TEST_CASE("catalog") {
    std::size_t with_ratio = 0;
    for (const auto& s : catalog()) {
        CHECK_FALSE(s.faces.empty());
        for (const auto& f : s.faces) {
            CHECK(f.count > 0);
        }
        if (s.ratio_sq_expr) {
            ++with_ratio;
            CHECK(s.ratio_sq_expr->enclose(32).certain_sign() > 0);
        } else {
            CHECK(s.kind == RatioKind::none);
        }
        if (s.kind == RatioKind::quadratic_surd) {
            CHECK(s.ratio_sq.has_value());
        }
    }
    CHECK(with_ratio == 15);
    CHECK(catalog().size() == 17);
    CHECK(face_vector(find_solid("rhombicuboctahedron")) == "18[4] 8[3]");
    CHECK_THROWS_AS(find_solid("dodecahedron"), UnknownSolid);
}

TEST_CASE("circumdiameter_from_edge") {
    CHECK(circumdiameter_from_edge(find_solid("truncated-icosahedron"), 12).to_string() ==
          "sqrt(2088+sqrt(2099520))");
    CHECK(circumdiameter_from_edge(find_solid("cuboctahedron"), E("3-sqrt(1/2)")).to_string() == "6-sqrt(2)");
    CHECK(to_significant(circumdiameter_from_edge(find_solid("snub-cube"), 10), 6) == "26.8743");
    CHECK(circumdiameter_from_edge(find_solid("rhombicuboctahedron"), 9).to_string() == "sqrt(405+sqrt(52488))");
    CHECK_THROWS_AS(circumdiameter_from_edge(find_solid("snub-dodecahedron"), 1), std::invalid_argument);
}

TEST_CASE("edge_from_circumdiameter") {
    CHECK(edge_from_circumdiameter(find_solid("truncated-cube"), 10).to_string() ==
          "sqrt((700-sqrt(320000))/17)");
    CHECK(edge_from_circumdiameter(find_solid("rhombicosidodecahedron"), E("2*sqrt(3)")).to_string() ==
          "sqrt((132-sqrt(11520))/41)");
    CHECK(edge_from_circumdiameter(find_solid("cuboctahedron"), 7).to_string() == "7/2");
    CHECK(to_significant(edge_from_circumdiameter(find_solid("snub-cube"), E("268743/10000")), 4) == "10.00");
}

TEST_CASE("pseudo_rcd_ratio_sq") {
    const RadicalExpr one = pseudo_rcd_ratio_sq(1);
    CHECK(radical_equals(one, *find_solid("rhombicosidodecahedron").ratio_sq_expr).outcome == Equality::equal);
    CHECK(to_decimal(pseudo_rcd_ratio_sq(E("sqrt((27-sqrt(45))/72)")), 1) == "13.4");
    const RadicalExpr limit = pseudo_rcd_ratio_sq(0);
    CHECK(radical_equals(limit, E("3+3*(1+sqrt(5))/2")).outcome == Equality::equal);
}

TEST_CASE("circumradius_sq_from_coordinates") {
    const auto rid = rhombicosidodecahedron_vertices();
    CHECK(rid.size() == 60);
    CHECK(circumradius_sq_from_coordinates(rid) == QuadraticSurd(11, 4, 5));
    CHECK(circumradius_sq_from_coordinates(cube_vertices()) == QuadraticSurd(3));
    CHECK(circumradius_sq_from_coordinates(cuboctahedron_vertices()) == QuadraticSurd(4));
    std::vector<Vec3> bad = cube_vertices();
    bad.push_back({QuadraticSurd(2), QuadraticSurd(0), QuadraticSurd(0)});
    CHECK_THROWS_AS(circumradius_sq_from_coordinates(bad), std::invalid_argument);
    CHECK_THROWS(circumradius_sq_from_coordinates({}));
}

TEST_CASE("catalog coordinates agree with the ratios") {
    CHECK(circumradius_sq_from_coordinates(rhombicosidodecahedron_vertices()) ==
          *find_solid("rhombicosidodecahedron").ratio_sq);
    CHECK(circumradius_sq_from_coordinates(cuboctahedron_vertices()) == *find_solid("cuboctahedron").ratio_sq);
}

TEST_CASE("edge relations of the elongated hexagonal diamond") {
    const SolidSpec& s = find_solid("elongated-hexagonal-diamond");
    REQUIRE(s.edge_relations.size() == 1);
    CHECK(radical_equals(s.edge_relations[0].factor, E("sqrt(5)/2")).outcome == Equality::equal);
    const RadicalExpr d1 = E("sqrt(5)-sqrt(13/20)");
    const RadicalExpr d2 = E("5/2-sqrt(13/16)");
    CHECK(radical_equals(d2, d1 * s.edge_relations[0].factor).outcome == Equality::equal);
}

TEST_CASE("round trip through the catalog") {
    for (const auto& s : catalog()) {
        if (s.kind != RatioKind::quadratic_surd) {
            continue;
        }
        for (const auto* d : {"1", "7/3", "12"}) {
            const RadicalExpr back = edge_from_circumdiameter(s, circumdiameter_from_edge(s, E(d)));
            CHECK_MESSAGE(radical_equals(back, E(d)).outcome == Equality::equal, s.id);
        }
    }
}
