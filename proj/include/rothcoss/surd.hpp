#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rothcoss/exact_number.hpp"
#include "rothcoss/multisurd.hpp"

namespace rothcoss {

/// Exact value a + b sqrt(m) with m squarefree >= 2, or a rational (b = 0, m = 1).
class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(const Rational& a);  // NOLINT(google-explicit-constructor)
    /// a + b sqrt(radicand) for any radicand >= 0; square factors are pulled out.
    QuadraticSurd(const Rational& a, const Rational& b, const BigInt& radicand);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_coefficient() const { return b_; }
    /// Squarefree radicand, 1 when the value is rational.
    const BigInt& radicand() const { return m_; }
    bool is_rational() const { return b_.is_zero(); }

    /// Exact sign from comparing a^2 with b^2 m.
    int sign() const;
    QuadraticSurd conjugate() const;
    /// (a + b sqrt m)(a - b sqrt m)
    Rational norm() const;

    QuadraticSurd operator-() const;
    /// Arithmetic requires equal radicands (or a rational operand);
    /// mixing fields throws std::domain_error.
    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);
    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
    friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() < 0; }

    MultiSurd to_multisurd() const;
    /// Inverse of to_multisurd; empty when more than one radicand is involved.
    static std::optional<QuadraticSurd> from_multisurd(const MultiSurd& v);

    /// `6-sqrt(2)`, `9/2+sqrt(21)/2`.
    std::string to_string() const;

private:
    Rational a_;
    Rational b_;
    BigInt m_ = 1;
};

/// Real roots of x^2 + p x + q, ascending; empty for a negative discriminant.
/// A double root is reported twice.
std::vector<QuadraticSurd> quadratic_roots(const Rational& p, const Rational& q);

/// outer * sqrt(inner) with outer > 0 and inner >= 0.
///
/// Canonical form: inner = p + q sqrt(m) with integer p, q whose gcd is
/// squarefree, so no rational square factor can be moved out.
struct NestedRadical {
    Rational outer;
    QuadraticSurd inner;

    /// Value when inner is a perfect rational square.
    std::optional<Rational> as_rational() const;
    MultiSurd square() const;
    /// `9*sqrt(5+2*sqrt(2))`
    std::string to_string() const;
    friend bool operator==(const NestedRadical&, const NestedRadical&) = default;
};

/// Canonical sqrt(s); throws std::domain_error for s < 0.
NestedRadical sqrt_of_surd(const QuadraticSurd& s);

/// u + v sqrt(m) >= 0 with (u + v sqrt(m))^2 = inner, scaled by outer, when
/// p^2 - q^2 m is a rational square.
std::optional<QuadraticSurd> denest(const NestedRadical& r);

/// sqrt(k) * (u + v sqrt(m)) with squarefree integer k >= 1.
struct ScaledSurd {
    BigInt scale_radicand;
    QuadraticSurd surd;
    MultiSurd value() const;
    std::string to_string() const;
};

/// Like denest, but also tries moving a squarefree factor k of the inner
/// content out as sqrt(k): sqrt(18+6 sqrt 5) = sqrt(3) (1 + sqrt 5).
std::optional<ScaledSurd> denest_with_scale(const NestedRadical& r);

/// Printable normal form: the denested value when possible, otherwise
/// `outer*sqrt(inner)`.
std::string simplified_string(const NestedRadical& r);

}  // namespace rothcoss
