#include <doctest.h>

#include "rothcoss/polygonal.hpp"

using namespace rothcoss;

TEST_CASE("polygonal_poly") {
    CHECK(polygonal_poly(PolygonalKind(5406)) == parse_polynomial("2702x^2-2701x"));
    CHECK(polygonal_poly(PolygonalKind(4)) == parse_polynomial("x^2"));
    CHECK(polygonal_poly(PolygonalKind(3)).evaluate(2) == 3);
    CHECK_THROWS_AS(PolygonalKind(2), std::invalid_argument);
}

TEST_CASE("polygonal recurrence") {
    for (int n = 3; n <= 100; ++n) {
        const Polynomial o = polygonal_poly(PolygonalKind(n));
        Rational prev = 0;
        CHECK(o.evaluate(0) == 0);
        for (int x = 1; x <= 50; ++x) {
            const Rational next = prev + Rational(n - 2) * Rational(x - 1) + 1;
            REQUIRE(o.evaluate(x) == next);
            prev = next;
        }
    }
}

TEST_CASE("to_standard_form") {
    const auto xxiii = to_standard_form(PolygonalKind(326), parse_polynomial("x^5-8x^4-20x^3+578x^2-2861x+7072"));
    CHECK_FALSE(xxiii.degenerate);
    CHECK(xxiii.polynomial == parse_polynomial("x^5-8x^4-20x^3+416x^2-2700x+7072"));
    const auto xxiv = to_standard_form(PolygonalKind(765),
                                       parse_polynomial("x^5-9x^4-4x^3+(689+1/2)x^2-(2632+1/2)x+6188"));
    CHECK(xxiv.polynomial == parse_polynomial("x^5-9x^4-4x^3+308x^2-2252x+6188"));
    CHECK(to_standard_form(PolygonalKind(4), parse_polynomial("x^2")).degenerate);
}

TEST_CASE("standard form recovers q") {
    const Polynomial q = parse_polynomial("x^5-8x^4-20x^3+578x^2-2861x+7072");
    const PolygonalKind k(326);
    CHECK(to_standard_form(k, q).polynomial + polygonal_poly(k) == q);
}

TEST_CASE("standard form of a negative leading coefficient") {
    const auto sf = to_standard_form(parse_polynomial("-2x^2+4x-6"));
    CHECK(sf.polynomial == parse_polynomial("x^2-2x+3"));
}
