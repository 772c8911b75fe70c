#pragma once

#include <concepts>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rothcoss/exact_number.hpp"
#include "rothcoss/interval.hpp"
#include "rothcoss/multisurd.hpp"

namespace rothcoss {

/// Evaluation hit a negative square-root operand or a zero divisor.
class DomainError : public std::domain_error {
public:
    DomainError(const std::string& message, std::string subtree);
    /// Printed form of the offending subexpression.
    const std::string& subtree() const { return subtree_; }

private:
    std::string subtree_;
};

/// Immutable expression tree over rational leaves with + - * /, negation,
/// square roots and real cube roots. Copies share structure.
///
/// Text syntax: `sqrt(2088+sqrt(2099520))`, `(1+cbrt(19-3*sqrt(33)))/3`.
class RadicalExpr {
public:
    enum class Kind { number, add, subtract, multiply, divide, negate, sqrt, cbrt };

    RadicalExpr();
    RadicalExpr(const Rational& q);  // NOLINT(google-explicit-constructor)
    template <std::integral T>
    RadicalExpr(T v) : RadicalExpr(Rational(v)) {}  // NOLINT(google-explicit-constructor)

    /// Throws ParseError.
    static RadicalExpr parse(std::string_view text);
    /// `a+b*sqrt(s)/c+...` with integer leaves only.
    static RadicalExpr from(const MultiSurd& v);

    Kind kind() const;
    /// Leaf value; only valid for Kind::number.
    const Rational& number() const;
    /// Child i (0 or 1) of an operator node.
    RadicalExpr child(std::size_t i) const;
    std::size_t arity() const;
    bool contains_cbrt() const;

    friend RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b);
    friend RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b);
    friend RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b);
    friend RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b);
    RadicalExpr operator-() const;
    friend RadicalExpr sqrt(const RadicalExpr& a);
    friend RadicalExpr cbrt(const RadicalExpr& a);

    /// Structural equality.
    friend bool operator==(const RadicalExpr& a, const RadicalExpr& b);

    /// Minimal parenthesization; parse(to_string()) rebuilds the same tree
    /// for trees whose leaves are nonnegative integers.
    std::string to_string() const;

    /// Enclosure at the given working precision. Empty when a divisor
    /// cannot yet be separated from zero; throws DomainError when a square
    /// root operand is certainly negative.
    std::optional<Interval> try_enclose(mpfr_prec_t precision) const;

    /// Enclosure narrower than 2^-bits, refining the precision as needed.
    /// Throws DomainError when no precision up to the internal cap separates
    /// a divisor from zero.
    Interval enclose(long bits) const;

    struct Node;
    const std::shared_ptr<const Node>& node() const { return node_; }

private:
    explicit RadicalExpr(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Rounds half away from zero to `places` digits after the point, certified
/// by interval refinement: `46.3492`.
std::string to_decimal(const RadicalExpr& e, unsigned places);

/// Same, with `digits` significant digits: 26.874315 at 8 digits.
std::string to_significant(const RadicalExpr& e, unsigned digits);

/// Exact rational x rounded half away from zero to `places` digits.
std::string format_fixed(const Rational& x, unsigned places);

/// Exact normal form of a real number whose square lies in a multiquadratic
/// field: x = sign * sqrt(square). `value` is set when x itself lies in the
/// field (found by the denesting search).
struct ExactValue {
    int sign = 0;
    MultiSurd square;
    std::optional<MultiSurd> value;

    static ExactValue of(const MultiSurd& v);
    friend bool operator==(const ExactValue& a, const ExactValue& b) {
        return a.sign == b.sign && a.square == b.square;
    }
};

/// Normal form when every node stays inside the class; empty otherwise
/// (for instance irrational cube roots, or sums whose product of squares has
/// no square root in the field).
std::optional<ExactValue> exact_value(const RadicalExpr& e);

/// The value as a rational, when it is one.
std::optional<Rational> exact_rational(const RadicalExpr& e);

/// Printable normal form: the field element when known, otherwise
/// `sqrt((p+sqrt(q))/r)` with integers p, q, r.
RadicalExpr canonical_expr(const ExactValue& v);

enum class Equality { equal, unequal, undecided };

struct Comparison {
    Equality outcome;
    /// True when decided by exact normal forms rather than by intervals.
    bool exact;
};

/// Exact decision inside the normal-form class; otherwise unequal only when
/// certified intervals separate the values, undecided when they never do.
Comparison radical_equals(const RadicalExpr& a, const RadicalExpr& b);

std::string to_string(Equality e);

/// Real root of z^3 + c2 z^2 + c1 z + c0 by Cardan's formula.
struct CardanRoot {
    Rational c2;
    Rational c1;
    Rational c0;
    RadicalExpr expression;
};

/// (-c2 + cbrt(R - sqrt(D)) + cbrt(R + sqrt(D))) / 3, collapsed to a rational
/// when both cube roots are rational. Throws std::domain_error when the cubic
/// has three distinct real roots.
CardanRoot cardan_real_root(const Rational& c2, const Rational& c1, const Rational& c0);

}  // namespace rothcoss
