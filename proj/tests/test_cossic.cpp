#include <doctest.h>

#include "rothcoss/cossic.hpp"
#include "rothcoss/parse_error.hpp"

using namespace rothcoss;

namespace {
Polynomial P(const char* text) { return parse_polynomial(text); }
}  // namespace

TEST_CASE("parse_equation") {
    const CossicEquation xxiii = parse_equation("1SS + 578Z + 7072 - 2861R - 20C - 8ZZ");
    CHECK(expand(xxiii.lhs) == Polynomial({7072, -2861, 578, -20, -8, 1}));
    CHECK_FALSE(xxiii.rhs.has_value());

    const CossicEquation product = parse_equation("(1Z + 722)(1C + 3820)");
    REQUIRE(product.lhs.size() == 1);
    CHECK(product.lhs[0].factors.size() == 2);
    CHECK(expand(product.lhs) == P("x^5+722x^3+3820x^2+2758040"));

    CHECK(expand(parse_equation("0").lhs).is_zero());

    const CossicEquation mixed = parse_equation("1SS + (689+1/2)Z + 6188 - 9ZZ - 4C - (2632+1/2)R");
    const Polynomial m = expand(mixed.lhs);
    CHECK(m.coefficient(2) == Rational(BigInt(1379), BigInt(2)));
    CHECK(m.coefficient(1) == Rational(BigInt(-5265), BigInt(2)));
}

TEST_CASE("longest-match power symbols") {
    CHECK(expand(parse_equation("1ZC").lhs) == Polynomial::monomial(1, 6));
    CHECK(expand(parse_equation("1ZZR").lhs) == Polynomial::monomial(1, 5));
    CHECK(expand(parse_equation("2CSS").lhs) == Polynomial::monomial(2, 11));
    CHECK(expand(parse_equation("3N").lhs) == Polynomial::constant(3));
}

TEST_CASE("parse errors") {
    try {
        parse_equation("1SS + 2Q");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 8);
        CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(parse_equation("1SS +"), ParseError);
    CHECK_THROWS_AS(parse_equation("ngon(2): 1Z"), ParseError);
    CHECK_THROWS_AS(parse_equation("ngon(5): 1Z = 1R"), ParseError);
    CHECK_THROWS_AS(parse_equation("1Z = 1R = 2"), ParseError);
    CHECK_THROWS_AS(parse_equation("(1Z + 2"), ParseError);
    CHECK_THROWS_AS(parse_equation("1/0"), ParseError);
}

TEST_CASE("expand_to_polynomial and standard_form") {
    const CossicEquation ii = parse_equation("(1Z + 722)(1C + 3820) = 2769560 - 50ZZ - 4416R");
    CHECK(standard_form(ii).polynomial == P("x^5+50x^4+722x^3+3820x^2+4416x-11520"));
    const CossicEquation xxii = parse_equation("ngon(5406): 1SS + 3550Z - 1817R + 5232 - 4ZZ - 84C");
    CHECK(standard_form(xxii).polynomial == P("x^5-4x^4-84x^3+848x^2+884x+5232"));
    const ExpandedEquation identity = expand_to_polynomial(parse_equation("1R = 1R"));
    CHECK(identity.lhs == P("x"));
    CHECK(identity.rhs == P("x"));
    CHECK(standard_form(parse_equation("1R = 1R")).degenerate);
}

TEST_CASE("print_equation") {
    const char* const text = "ngon(326): 1SS + 578Z + 7072 - 2861R - 20C - 8ZZ";
    CHECK(print_equation(parse_equation(text)) == text);
    CHECK(print_equation(parse_equation("1SS+(689+1/2)Z")) == "1SS + (689+1/2)Z");
    CHECK(print_sum(from_polynomial(Polynomial({0, -2701, 2702}))) == "2702Z - 2701R");
    CHECK(print_sum(from_polynomial(Polynomial())) == "0");
    CHECK(print_sum(from_polynomial(P("x^2-(5/2)x+1/3"))) == "1Z - (2+1/2)R + 1/3");
    CHECK(power_symbol(6) == "ZC");
    CHECK_THROWS(power_symbol(12));
}
