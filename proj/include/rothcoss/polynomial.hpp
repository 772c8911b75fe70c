#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rothcoss/exact_number.hpp"

namespace rothcoss {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored by ascending power and trimmed so the leading
/// coefficient is nonzero. The zero polynomial has an empty coefficient list
/// and no degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);
    Polynomial(std::initializer_list<Rational> ascending);

    static Polynomial constant(const Rational& c);
    /// c * x^power
    static Polynomial monomial(const Rational& c, unsigned power);
    /// Builds a polynomial from coefficients listed by descending power.
    static Polynomial from_descending(std::vector<Rational> descending);

    bool is_zero() const { return coefficients_.empty(); }
    /// Degree; empty for the zero polynomial.
    std::optional<unsigned> degree() const;
    /// Coefficient of x^power (zero past the end).
    Rational coefficient(unsigned power) const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    Rational leading() const;

    bool is_monic() const;
    bool has_integer_coefficients() const;

    Rational evaluate(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(unsigned exponent) const;

    /// Human-readable form such as `x^5-12x^4+10x^3+248x^2-423x-924`.
    std::string to_string(char variable = 'x') const;

private:
    void trim();
    std::vector<Rational> coefficients_;
};

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division p = d * quotient + remainder with deg(remainder) < deg(d).
/// Throws std::domain_error when d is the zero polynomial.
DivisionResult divide(const Polynomial& p, const Polynomial& d);

/// q(z) = d^deg(p) * p(z / d) for monic p; throws std::invalid_argument
/// when p is not monic or d < 1.
Polynomial scale_substitute(const Polynomial& p, const BigInt& d);

/// Number of sign changes in the nonzero coefficients.
/// Throws std::invalid_argument for the zero polynomial.
unsigned sign_variations(const Polynomial& p);

/// Parses the plain-text syntax `x^5 - 12x^4 - (49+1/2)x^3 + 1/2x - 7`.
/// Any single lowercase letter may serve as the variable, used consistently.
/// Throws ParseError on malformed input.
Polynomial parse_polynomial(std::string_view text);

}  // namespace rothcoss
