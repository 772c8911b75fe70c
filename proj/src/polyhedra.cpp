#include "rothcoss/polyhedra.hpp"

#include <algorithm>

namespace rothcoss {

namespace {

QuadraticSurd surd(long a, long b, long m, long den = 1) {
    return QuadraticSurd(Rational(a, den), Rational(b, den), m);
}

RadicalExpr expr(const QuadraticSurd& s) { return RadicalExpr::from(s.to_multisurd()); }

SolidSpec quadratic(std::string id, std::vector<FaceCount> faces, std::string historical,
                    std::string modern, QuadraticSurd ratio, std::string notes = {}) {
    SolidSpec s;
    s.id = std::move(id);
    s.faces = std::move(faces);
    s.historical_name = std::move(historical);
    s.modern_name = std::move(modern);
    s.kind = RatioKind::quadratic_surd;
    s.ratio_sq = ratio;
    s.ratio_sq_expr = expr(ratio);
    s.notes = std::move(notes);
    return s;
}

SolidSpec name_only(std::string id, std::vector<FaceCount> faces, std::string modern) {
    SolidSpec s;
    s.id = std::move(id);
    s.faces = std::move(faces);
    s.modern_name = std::move(modern);
    s.notes = "no ratio given";
    return s;
}

std::vector<SolidSpec> build_catalog() {
    std::vector<SolidSpec> c;
    c.push_back(quadratic("rhombicuboctahedron", {{18, 4}, {8, 3}}, "bistruncatum cubum primum",
                          "rhombicuboctahedron", surd(5, 2, 2)));
    c.push_back(quadratic("truncated-octahedron", {{8, 6}, {6, 4}},
                          "octoedrum truncatum per laterum tertias", "truncated octahedron", Rational(10)));
    c.push_back(quadratic("cuboctahedron", {{6, 4}, {8, 3}}, "octoedrum truncatum per laterum media",
                          "cuboctahedron", Rational(4), "rho = d"));
    c.push_back(quadratic("truncated-icosahedron", {{20, 6}, {12, 5}},
                          "truncatum icosaedrum per laterum tertias", "truncated icosahedron",
                          surd(29, 9, 5, 2)));
    c.push_back(quadratic("icosidodecahedron", {{12, 5}, {20, 3}}, "truncatum icosaedrum per laterum media",
                          "icosidodecahedron", surd(6, 2, 5), "ratio (1+sqrt(5))^2"));
    c.push_back(quadratic("truncated-tetrahedron", {{4, 6}, {4, 3}}, "truncatum tetraedrum",
                          "truncated tetrahedron", Rational(11, 2)));
    {
        SolidSpec s = quadratic("elongated-hexagonal-diamond", {{6, 4}, {12, 3}}, "corpus irregulare",
                                "elongated hexagonal diamond", Rational(5),
                                "not semi-regular; the sphere passes through the 12 vertices of the "
                                "square faces only, the two remaining apexes lie off it");
        s.kind = RatioKind::multi_edge;
        s.reference_edge = "d1";
        s.edge_relations.push_back({"d2", "two longer edges of each triangle",
                                    RadicalExpr::parse("sqrt(5)/2")});
        c.push_back(std::move(s));
    }
    c.push_back(quadratic("truncated-cube", {{6, 8}, {8, 3}},
                          "truncatum cubum per laterum divisionis in tres partes", "truncated cube",
                          surd(7, 4, 2)));
    c.push_back(quadratic("truncated-dodecahedron", {{12, 10}, {20, 3}},
                          "truncatum dodecaedrum per laterum divisiones in tres partes",
                          "truncated dodecahedron", surd(37, 15, 5, 2)));
    c.push_back(quadratic("truncated-cuboctahedron", {{12, 4}, {8, 6}, {6, 8}}, "bistruncatum cubum secundum",
                          "truncated cuboctahedron", surd(13, 6, 2)));
    c.push_back(quadratic("rhombicosidodecahedron", {{20, 3}, {12, 5}, {30, 4}}, "",
                          "rhombicosidodecahedron", surd(11, 4, 5), "ratio 5 phi^2 + phi^4 = 7 + 8 phi"));
    {
        SolidSpec s;
        s.id = "snub-cube";
        s.faces = {{6, 4}, {32, 3}};
        s.historical_name = "cubus simus";
        s.modern_name = "snub cube";
        s.kind = RatioKind::cubic_cardan;
        const RadicalExpr t = cardan_real_root(-1, -1, -1).expression;
        s.ratio_sq_expr = (RadicalExpr(3) - t) / (RadicalExpr(2) - t);
        s.notes = "t is the real root of t^3 = t^2 + t + 1; outputs are certified numerics";
        c.push_back(std::move(s));
    }
    {
        SolidSpec s = quadratic("rectified-rhombicuboctahedron", {{8, 3}, {18, 4}, {24, 4}}, "corpus irregulare",
                                "rhombicuboctahedron with edges cut at the midpoints", surd(8, 4, 2),
                                "not semi-regular; 24 faces are irregular quadrilaterals; d is the "
                                "edge of the square faces");
        s.kind = RatioKind::multi_edge;
        s.edge_relations.push_back({"d_triangle", "edge of the triangular faces",
                                    RadicalExpr::parse("sqrt(2)/2")});
        c.push_back(std::move(s));
    }
    {
        SolidSpec s;
        s.id = "pseudo-rhombicosidodecahedron";
        s.faces = {{20, 3}, {12, 5}, {30, 4}};
        s.historical_name = "corpus irregulare";
        s.modern_name = "rhombicosidodecahedron with oblong rectangles";
        s.kind = RatioKind::multi_edge;
        s.reference_edge = "d1";
        const RadicalExpr r = RadicalExpr::parse("sqrt((27-sqrt(45))/72)");
        s.ratio_sq_expr = pseudo_rcd_ratio_sq(r);
        s.edge_relations.push_back({"d2", "edge of the triangular faces", r});
        s.notes = "d1 is the pentagon edge; ratio from the continuous 20[3] 12[5] 30[4] family "
                  "formula, taken as printed (its derivation is not written out)";
        c.push_back(std::move(s));
    }
    {
        SolidSpec s = quadratic("rectified-truncated-icosahedron", {{12, 5}, {20, 6}, {60, 3}},
                                "corpus irregulare", "truncated icosahedron with edges cut at the midpoints",
                                surd(18, 6, 5),
                                "not semi-regular; triangles are scalene; d2 is the hexagon edge");
        s.kind = RatioKind::multi_edge;
        s.reference_edge = "d2";
        s.edge_relations.push_back({"d1", "edge of the pentagonal faces",
                                    RadicalExpr::parse("(sqrt(3)+sqrt(15))/6")});
        c.push_back(std::move(s));
    }
    c.push_back(name_only("truncated-icosidodecahedron", {{30, 4}, {20, 6}, {12, 10}},
                          "truncated icosidodecahedron"));
    c.push_back(name_only("snub-dodecahedron", {{12, 5}, {80, 3}}, "snub dodecahedron"));
    return c;
}

const RadicalExpr& checked_ratio(const SolidSpec& s) {
    if (!s.ratio_sq_expr) {
        throw std::invalid_argument("solid " + s.id + " has no circumdiameter ratio");
    }
    return *s.ratio_sq_expr;
}

std::string join_ids() {
    std::string out;
    for (const auto& id : solid_ids()) {
        out += (out.empty() ? "" : ", ") + id;
    }
    return out;
}

QuadraticSurd distance_sq(const Vec3& a, const Vec3& b) {
    QuadraticSurd sum;
    for (std::size_t i = 0; i < 3; ++i) {
        const QuadraticSurd d = a[i] - b[i];
        sum = sum + d * d;
    }
    return sum;
}

}  // namespace

std::string to_string(RatioKind k) {
    switch (k) {
        case RatioKind::quadratic_surd:
            return "quadratic_surd";
        case RatioKind::cubic_cardan:
            return "cubic_cardan";
        case RatioKind::multi_edge:
            return "multi_edge";
        case RatioKind::none:
            return "none";
    }
    return "none";
}

UnknownSolid::UnknownSolid(const std::string& id)
    : std::out_of_range("unknown solid '" + id + "'; known solids: " + join_ids()) {}

const std::vector<SolidSpec>& catalog() {
    static const std::vector<SolidSpec> solids = build_catalog();
    return solids;
}

const SolidSpec& find_solid(std::string_view id) {
    for (const auto& s : catalog()) {
        if (s.id == id) {
            return s;
        }
    }
    throw UnknownSolid(std::string(id));
}

std::vector<std::string> solid_ids() {
    std::vector<std::string> ids;
    for (const auto& s : catalog()) {
        ids.push_back(s.id);
    }
    return ids;
}

std::string face_vector(const SolidSpec& s) {
    std::string out;
    for (const auto& f : s.faces) {
        out += (out.empty() ? "" : " ") + std::to_string(f.count) + "[" + std::to_string(f.sides) + "]";
    }
    return out;
}

RadicalExpr simplify(const RadicalExpr& e) {
    if (const auto v = exact_value(e)) {
        return canonical_expr(*v);
    }
    return e;
}

RadicalExpr circumdiameter_from_edge(const SolidSpec& s, const RadicalExpr& d) {
    return simplify(d * sqrt(checked_ratio(s)));
}

RadicalExpr edge_from_circumdiameter(const SolidSpec& s, const RadicalExpr& diameter) {
    return simplify(diameter / sqrt(checked_ratio(s)));
}

QuadraticSurd golden_ratio() { return surd(1, 1, 5, 2); }

RadicalExpr pseudo_rcd_ratio_sq(const RadicalExpr& r) {
    const QuadraticSurd phi = golden_ratio();
    const QuadraticSurd a = QuadraticSurd(3) + QuadraticSurd(3) * phi;
    const QuadraticSurd b = QuadraticSurd(2) + QuadraticSurd(4) * phi;
    const QuadraticSurd c = QuadraticSurd(2) + phi;
    return expr(a) + expr(b) * r + expr(c) * r * r;
}

QuadraticSurd circumradius_sq_from_coordinates(const std::vector<Vec3>& vertices) {
    if (vertices.empty()) {
        throw std::invalid_argument("no vertices");
    }
    const Vec3 origin{};
    const QuadraticSurd radius_sq = distance_sq(vertices.front(), origin);
    for (const auto& v : vertices) {
        if (distance_sq(v, origin) != radius_sq) {
            throw std::invalid_argument("vertices are not all at the same distance from the origin");
        }
    }
    std::optional<QuadraticSurd> edge_sq;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            const QuadraticSurd d = distance_sq(vertices[i], vertices[j]);
            if (d.sign() > 0 && (!edge_sq || d < *edge_sq)) {
                edge_sq = d;
            }
        }
    }
    if (!edge_sq) {
        throw std::invalid_argument("need at least two distinct vertices");
    }
    return QuadraticSurd(4) * radius_sq / *edge_sq;
}

std::vector<Vec3> cube_vertices() {
    std::vector<Vec3> out;
    for (int x : {-1, 1}) {
        for (int y : {-1, 1}) {
            for (int z : {-1, 1}) {
                out.push_back({QuadraticSurd(x), QuadraticSurd(y), QuadraticSurd(z)});
            }
        }
    }
    return out;
}

std::vector<Vec3> cuboctahedron_vertices() {
    std::vector<Vec3> out;
    for (int a : {-1, 1}) {
        for (int b : {-1, 1}) {
            out.push_back({QuadraticSurd(a), QuadraticSurd(b), QuadraticSurd(0)});
            out.push_back({QuadraticSurd(a), QuadraticSurd(0), QuadraticSurd(b)});
            out.push_back({QuadraticSurd(0), QuadraticSurd(a), QuadraticSurd(b)});
        }
    }
    return out;
}

std::vector<Vec3> rhombicosidodecahedron_vertices() {
    // Edge 2: cyclic permutations of (+-1, +-1, +-phi^3), (+-phi^2, +-phi, +-2phi),
    // (+-(2+phi), 0, +-phi^2); scaled by 1/phi.
    const QuadraticSurd phi = golden_ratio();
    const QuadraticSurd phi2 = phi * phi;
    const QuadraticSurd phi3 = phi2 * phi;
    const std::array<Vec3, 3> bases{{
        {QuadraticSurd(1), QuadraticSurd(1), phi3},
        {phi2, phi, QuadraticSurd(2) * phi},
        {QuadraticSurd(2) + phi, QuadraticSurd(0), phi2},
    }};
    const QuadraticSurd scale = QuadraticSurd(1) / phi;
    std::vector<Vec3> out;
    for (const auto& base : bases) {
        for (int mask = 0; mask < 8; ++mask) {
            Vec3 v = base;
            bool duplicate = false;
            for (int i = 0; i < 3; ++i) {
                if ((mask >> i) & 1) {
                    if (v[i].sign() == 0) {
                        duplicate = true;
                    }
                    v[i] = -v[i];
                }
            }
            if (duplicate) {
                continue;
            }
            for (int shift = 0; shift < 3; ++shift) {
                out.push_back({v[shift] * scale, v[(shift + 1) % 3] * scale, v[(shift + 2) % 3] * scale});
            }
        }
    }
    return out;
}

}  // namespace rothcoss
