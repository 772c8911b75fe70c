#include <doctest.h>

#include "rothcoss/polynomial.hpp"

using namespace rothcoss;

namespace {
Polynomial P(const char* text) { return parse_polynomial(text); }
}  // namespace

TEST_CASE("evaluate") {
    CHECK(P("x^5-12x^4+10x^3+248x^2-423x-924").evaluate(-4) == 0);
    CHECK(Polynomial().evaluate(Rational(17)) == 0);
    CHECK(P("x^5-8x^4-20x^3+416x^2-2700x+7072").evaluate(8) == 1856);
}

TEST_CASE("divide") {
    const Polynomial pi = P("x^5-12x^4+10x^3+248x^2-423x-924");
    CHECK(divide(pi, P("x^2-12x+33")).remainder.is_zero());
    CHECK(divide(P("x^5-8x^4-20x^3+416x^2-2700x+7072"), P("x^2-12x+34")).remainder.is_zero());
    const auto unit = divide(pi, Polynomial::constant(1));
    CHECK(unit.quotient == pi);
    CHECK(unit.remainder.is_zero());
    CHECK_THROWS(divide(pi, Polynomial()));
}

TEST_CASE("scale_substitute") {
    CHECK(scale_substitute(P("x^5-4x^4-(29+1/2)x^3+(95+1/2)x^2-(334+11/16)x+(1141+7/8)"), 2) ==
          P("x^5-8x^4-118x^3+764x^2-5355x+36540"));
    CHECK(scale_substitute(P("x^5-2x^4-(49+1/2)x^3+(156+1/2)x^2-(509+11/16)x+(1522+1/2)"), 2) ==
          P("x^5-4x^4-198x^3+1252x^2-8155x+48720"));
    const Polynomial p = P("x^3-2x+7");
    CHECK(scale_substitute(p, 1) == p);
    CHECK_THROWS(scale_substitute(P("2x^2+1"), 2));
}

TEST_CASE("sign_variations") {
    CHECK(sign_variations(P("x^6+22x^5-13x^4-106x^3-1583x^2-5185x")) == 1);
    CHECK(sign_variations(P("x^2+x+9")) == 0);
    CHECK(sign_variations(P("x^2-12x+34")) == 2);
}

TEST_CASE("parse and print") {
    const Polynomial p = P("x^5 - 12x^4 + 10x^3 + 248x^2 - 423x - 924");
    CHECK(p.degree() == 5u);
    CHECK(p.to_string() == "x^5-12x^4+10x^3+248x^2-423x-924");
    CHECK(P(p.to_string().c_str()) == p);
    CHECK(Polynomial().to_string() == "0");
    CHECK_FALSE(Polynomial().degree().has_value());
    CHECK(P("x^2 - 1/2x").coefficient(1) == Rational(BigInt(-1), BigInt(2)));
    CHECK_THROWS(P("x^2 +"));
    CHECK_THROWS(P("x^2+y"));
}
