#include <cmath>

#include <doctest.h>

#include "rothcoss/parse_error.hpp"
#include "rothcoss/radical_expr.hpp"
#include "rothcoss/surd.hpp"

using namespace rothcoss;

namespace {
RadicalExpr E(const char* text) { return RadicalExpr::parse(text); }
Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("quadratic_roots") {
    const auto xxiii = quadratic_roots(-12, 34);
    REQUIRE(xxiii.size() == 2);
    CHECK(xxiii[0].to_string() == "6-sqrt(2)");
    CHECK(xxiii[1].to_string() == "6+sqrt(2)");
    const auto ii = quadratic_roots(4, -6);
    REQUIRE(ii.size() == 2);
    CHECK(ii[1] == QuadraticSurd(-2, 1, 10));
    CHECK(quadratic_roots(1, 3).empty());
    const auto rational = quadratic_roots(-5, 6);
    CHECK(rational[0] == QuadraticSurd(2));
    CHECK(rational[1].is_rational());
}

TEST_CASE("QuadraticSurd sign and arithmetic") {
    CHECK(QuadraticSurd(-2, 1, 10).sign() > 0);
    CHECK(QuadraticSurd(0).sign() == 0);
    CHECK(QuadraticSurd(6, -1, 2).sign() > 0);
    CHECK(QuadraticSurd(1, -1, 2).sign() < 0);
    CHECK(QuadraticSurd(0, 1, 8) == QuadraticSurd(0, 2, 2));
    const QuadraticSurd a(1, 1, 5);
    CHECK(a * a == QuadraticSurd(6, 2, 5));
    CHECK(a / a == QuadraticSurd(1));
    CHECK(a.norm() == -4);
    CHECK_THROWS_AS(a + QuadraticSurd(0, 1, 2), std::domain_error);
}

TEST_CASE("sqrt_of_surd") {
    const NestedRadical xxi = sqrt_of_surd(QuadraticSurd(405, 162, 2));
    CHECK(xxi.outer == 9);
    CHECK(xxi.inner == QuadraticSurd(5, 2, 2));
    CHECK(xxi.to_string() == "9*sqrt(5+2*sqrt(2))");
    CHECK(sqrt_of_surd(QuadraticSurd(4)).as_rational() == Rational(2));
    CHECK(simplified_string(sqrt_of_surd(QuadraticSurd(18, 6, 5))) == "sqrt(3)*(1+sqrt(5))");
    CHECK_THROWS_AS(sqrt_of_surd(QuadraticSurd(1, -1, 2)), std::domain_error);
}

TEST_CASE("denest") {
    CHECK(denest(sqrt_of_surd(QuadraticSurd(3, 2, 2))) == QuadraticSurd(1, 1, 2));
    CHECK_FALSE(denest(sqrt_of_surd(QuadraticSurd(5, 2, 2))).has_value());
    CHECK(denest(sqrt_of_surd(QuadraticSurd(6, 2, 5))) == QuadraticSurd(1, 1, 5));
    const auto scaled = denest_with_scale(sqrt_of_surd(QuadraticSurd(18, 6, 5)));
    REQUIRE(scaled.has_value());
    CHECK(scaled->scale_radicand == 3);
    CHECK(scaled->surd == QuadraticSurd(1, 1, 5));
}

TEST_CASE("MultiSurd") {
    const MultiSurd s = MultiSurd::sqrt_of(1, 2) + MultiSurd::sqrt_of(1, 3);
    CHECK(s.radicands() == std::set<BigInt>{2, 3});
    CHECK((s * s).to_string() == "5+2*sqrt(6)");
    CHECK(s * s.inverse() == MultiSurd(1));
    CHECK((s * s).sqrt() == s);
    CHECK(MultiSurd::sqrt_of(q(1, 2)).to_string() == "sqrt(2)/2");
    CHECK((MultiSurd(3) - MultiSurd::sqrt_of(1, 10)).sign() < 0);
    CHECK_THROWS(MultiSurd().inverse());
}

TEST_CASE("RadicalExpr parse and print") {
    CHECK(E("sqrt(2088+sqrt(2099520))").to_string() == "sqrt(2088+sqrt(2099520))");
    CHECK(E("(1+cbrt(19-3*sqrt(33))+cbrt(19+3*sqrt(33)))/3").to_string() ==
          "(1+cbrt(19-3*sqrt(33))+cbrt(19+3*sqrt(33)))/3");
    CHECK(E("1-(2-3)").to_string() == "1-(2-3)");
    CHECK(E("-sqrt(2)").kind() == RadicalExpr::Kind::negate);
    CHECK(E("5/2-sqrt(13/16)") == E("5/2-sqrt(13/16)"));
    CHECK(E("3/4").kind() == RadicalExpr::Kind::divide);
    CHECK_THROWS_AS(E("sqrt(2"), ParseError);
    CHECK_THROWS_AS(E("2+"), ParseError);
}

TEST_CASE("radical_equals") {
    const Comparison xxv = radical_equals(E("(1+sqrt(5))*sqrt(5-sqrt(5))"), E("sqrt(20+sqrt(80))"));
    CHECK(xxv.outcome == Equality::equal);
    CHECK(xxv.exact);
    CHECK(radical_equals(E("12*sqrt((29+9*sqrt(5))/2)"), E("sqrt(2088+sqrt(2099520))")).outcome == Equality::equal);
    const Comparison xxx = radical_equals(
        E("sqrt((sqrt(1400000000+sqrt(320000000000000000))+10000)/(sqrt(35000+sqrt(200000000))-125-sqrt(5000)))"),
        E("sqrt(sqrt(2240000+sqrt(819200000000))+400)"));
    CHECK(xxx.outcome == Equality::unequal);
    CHECK(radical_equals(E("cbrt(2)"), E("cbrt(2)")).outcome != Equality::unequal);
    CHECK(radical_equals(E("cbrt(8)"), E("2")).outcome == Equality::equal);
    CHECK(to_string(Equality::undecided) == "undecided");
}

TEST_CASE("to_decimal") {
    CHECK(to_decimal(E("10*sqrt(13+6*sqrt(2))"), 4) == "46.3522");
    CHECK(to_decimal(E("10*sqrt(13+6*sqrt(2))"), 2) == "46.35");
    CHECK(to_decimal(E("sqrt((sqrt(1400000000+sqrt(320000000000000000))+10000)/"
                       "(sqrt(35000+sqrt(200000000))-125-sqrt(5000)))"),
                     2) == "45.74");
    CHECK(to_decimal(E("sqrt(4)"), 4) == "2.0000");
    CHECK(to_decimal(E("-1/3"), 3) == "-0.333");
    CHECK(to_significant(E("sqrt(2)"), 5) == "1.4142");
    CHECK(format_fixed(q(5, 2), 0) == "3");
    CHECK_THROWS_AS(to_decimal(E("sqrt(1-sqrt(2))"), 3), DomainError);
    CHECK_THROWS_AS(to_decimal(E("1/(sqrt(2)-sqrt(2))"), 3), DomainError);
}

TEST_CASE("exact normal forms") {
    const auto v = exact_value(E("sqrt(6+2*sqrt(5))"));
    REQUIRE(v.has_value());
    REQUIRE(v->value.has_value());
    CHECK(v->value->to_string() == "1+sqrt(5)");
    CHECK(exact_rational(E("sqrt(9/4)+1/2")) == Rational(2));
    CHECK_FALSE(exact_rational(E("sqrt(2)")).has_value());
    CHECK(canonical_expr(*exact_value(E("10/sqrt(13+6*sqrt(2))"))).to_string() ==
          "sqrt((1300-sqrt(720000))/97)");
}

TEST_CASE("cardan_real_root") {
    const CardanRoot t = cardan_real_root(-1, -1, -1);
    CHECK(t.expression.to_string() == "(1+cbrt(19-3*sqrt(33))+cbrt(19+3*sqrt(33)))/3");
    CHECK(to_significant(t.expression, 30) == "1.83928675521416113255185256465");
    const RadicalExpr residual = t.expression * t.expression * t.expression - t.expression * t.expression -
                                 t.expression - RadicalExpr(1);
    const Interval r = residual.enclose(120);
    CHECK(r.lower() > -q(1, 1) / Rational(BigInt("10000000000000000000000000")));
    CHECK(r.upper() < q(1, 1) / Rational(BigInt("10000000000000000000000000")));
    CHECK(cardan_real_root(0, 0, -8).expression.to_string() == "2");
    CHECK_THROWS_AS(cardan_real_root(0, -7, 6), std::domain_error);
    const RadicalExpr snub = RadicalExpr(10) * sqrt((RadicalExpr(9) - RadicalExpr(3) * t.expression) /
                                                    (RadicalExpr(6) - RadicalExpr(3) * t.expression));
    CHECK(to_significant(snub, 6) == "26.8743");
}
