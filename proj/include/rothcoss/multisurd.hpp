#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "rothcoss/exact_number.hpp"
#include "rothcoss/interval.hpp"

namespace rothcoss {

/// Element of a multiquadratic field: sum of c_s * sqrt(s) over squarefree
/// integers s >= 1 (s = 1 is the rational part).
///
/// The square roots of distinct squarefree integers are linearly independent
/// over Q, so this representation is unique and equality is exact.
class MultiSurd {
public:
    using Terms = std::map<BigInt, Rational>;

    MultiSurd() = default;
    MultiSurd(const Rational& q);  // NOLINT(google-explicit-constructor)
    /// coefficient * sqrt(radicand); any radicand >= 0, square parts are extracted.
    static MultiSurd sqrt_of(const Rational& coefficient, const BigInt& radicand);
    /// sqrt(q) for a rational q >= 0.
    static MultiSurd sqrt_of(const Rational& q);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    std::optional<Rational> as_rational() const;
    Rational rational_part() const;
    /// Coefficient of sqrt(s) for squarefree s.
    Rational coefficient(const BigInt& radicand) const;

    /// Primes dividing some radicand in the support.
    std::set<BigInt> primes() const;
    /// Sorted radicands (excluding 1).
    std::set<BigInt> radicands() const;

    MultiSurd operator-() const;
    MultiSurd& operator+=(const MultiSurd& rhs);
    MultiSurd& operator-=(const MultiSurd& rhs);
    MultiSurd& operator*=(const MultiSurd& rhs);
    MultiSurd& operator/=(const MultiSurd& rhs);
    friend MultiSurd operator+(MultiSurd a, const MultiSurd& b) { return a += b; }
    friend MultiSurd operator-(MultiSurd a, const MultiSurd& b) { return a -= b; }
    friend MultiSurd operator*(MultiSurd a, const MultiSurd& b) { return a *= b; }
    friend MultiSurd operator/(MultiSurd a, const MultiSurd& b) { return a /= b; }
    friend bool operator==(const MultiSurd&, const MultiSurd&) = default;

    /// Multiplicative inverse by successive conjugation; throws on zero.
    MultiSurd inverse() const;
    /// Flips the sign of every term whose radicand is divisible by `prime`.
    MultiSurd conjugate(const BigInt& prime) const;

    /// Exact sign, decided by interval refinement when irrational.
    int sign() const;

    /// Exact square root inside the multiquadratic numbers when one exists
    /// and the denesting search finds it (result >= 0). Every returned value
    /// has been verified by squaring.
    std::optional<MultiSurd> sqrt() const;

    Interval enclose(mpfr_prec_t precision) const;

    /// `1+sqrt(5)`, `5/2-sqrt(13)/4`, `3*sqrt(2)`.
    std::string to_string() const;

private:
    void add_term(const BigInt& radicand, const Rational& coefficient);
    Terms terms_;
};

}  // namespace rothcoss
