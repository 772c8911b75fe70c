#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace rothcoss {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Reduced fraction with a positive denominator.
///
/// Every constructor canonicalizes, so two equal values always share the same
/// numerator and denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    /// Throws std::domain_error when `denominator` is zero.
    Rational(const BigInt& numerator, const BigInt& denominator);

    /// Parses `a`, `-a` or `a/b` (decimal digits only).
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational reciprocal() const;

    /// Rational power with an integer exponent (negative exponents invert).
    Rational pow(int exponent) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// `a` for integers, `a/b` otherwise.
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Nonnegative greatest common divisor; gcd(0, 0) = 0.
BigInt gcd(const BigInt& a, const BigInt& b);

/// Deterministic primality for |n| < 3.3e24; beyond that throws std::domain_error.
bool is_prime(const BigInt& n);

struct PrimePower {
    BigInt prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly ascending primes. factorize(1) is empty.
/// Throws std::invalid_argument for n < 1.
std::vector<PrimePower> factorize(const BigInt& n);

/// All positive divisors of n in ascending order, built from the factorization.
std::vector<BigInt> divisors(const BigInt& n);

/// n = root^2 * squarefree with squarefree >= 1 (n > 0).
struct SquareSplit {
    BigInt root;
    BigInt squarefree;
};
SquareSplit split_square(const BigInt& n);

/// Exact square root of a nonnegative rational when it is rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Exact real cube root when it is rational.
std::optional<Rational> rational_cbrt(const Rational& q);

}  // namespace rothcoss
