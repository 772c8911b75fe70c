#include <doctest.h>

#include "rothcoss/exact_number.hpp"

using namespace rothcoss;

TEST_CASE("gcd") {
    CHECK(gcd(924, 33) == 33);
    CHECK(gcd(0, 5) == 5);
    CHECK(gcd(48720, 87) == 87);
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(-12, 18) == 6);
}

TEST_CASE("factorize") {
    CHECK(factorize(450) == std::vector<PrimePower>{{2, 1}, {3, 2}, {5, 2}});
    CHECK(factorize(7072) == std::vector<PrimePower>{{2, 5}, {13, 1}, {17, 1}});
    CHECK(factorize(1).empty());
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(-4), std::invalid_argument);
}

TEST_CASE("factorize a large semiprime") {
    const BigInt p("1000000007");
    const BigInt q("998244353");
    CHECK(factorize(p * q) == std::vector<PrimePower>{{q, 1}, {p, 1}});
}

TEST_CASE("divisors") {
    const auto d924 = divisors(924);
    CHECK(d924.size() == 24);
    CHECK(std::find(d924.begin(), d924.end(), BigInt(33)) != d924.end());
    CHECK(std::is_sorted(d924.begin(), d924.end()));
    CHECK(divisors(34) == std::vector<BigInt>{1, 2, 17, 34});
    CHECK(divisors(1) == std::vector<BigInt>{1});
    CHECK_THROWS(divisors(0));
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK(is_prime(29));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));
    CHECK(is_prime(BigInt("1000000007")));
}

TEST_CASE("rational normalization") {
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational::parse("1511/2") == Rational(BigInt(1511), BigInt(2)));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational(BigInt(1), BigInt(2)) + Rational(BigInt(1), BigInt(3)) == Rational(BigInt(5), BigInt(6)));
    CHECK(Rational(BigInt(3), BigInt(4)).to_string() == "3/4");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK(Rational(BigInt(2), BigInt(3)).pow(-2) == Rational(BigInt(9), BigInt(4)));
}

TEST_CASE("square and cube roots of rationals") {
    CHECK(split_square(52488).root == 162);
    CHECK(split_square(52488).squarefree == 2);
    CHECK(rational_sqrt(Rational(BigInt(9), BigInt(4))) == Rational(BigInt(3), BigInt(2)));
    CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
    CHECK(rational_cbrt(Rational(-8)) == Rational(-2));
    CHECK_FALSE(rational_cbrt(Rational(4)).has_value());
}
