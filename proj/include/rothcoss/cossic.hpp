#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rothcoss/polygonal.hpp"
#include "rothcoss/polynomial.hpp"

namespace rothcoss {

// ASCII cossic notation.
//
//   equation := [ "ngon(" integer "):" ] side | side "=" side
//   side     := [sign] term { sign term }
//   term     := factor { ["*"] factor }
//   factor   := integer [ "/" integer ] | power | "(" side ")"
//   power    := N R Z C ZZ SS ZC BS ZZZ CC ZSS CSS   (x^0 .. x^11)
//
// Power symbols are split by longest match, so `ZC` is x^6 and `ZZR` is
// x^4 * x. Mixed numbers are written `(689+1/2)`.

struct CossicTerm;

struct CossicFactor {
    enum class Kind { number, power, group };
    Kind kind = Kind::number;
    Rational number;
    unsigned power = 0;
    std::vector<CossicTerm> group;

    static CossicFactor of_number(const Rational& q);
    static CossicFactor of_power(unsigned k);
    static CossicFactor of_group(std::vector<CossicTerm> terms);
};

struct CossicTerm {
    bool negative = false;
    std::vector<CossicFactor> factors;
};

using CossicSum = std::vector<CossicTerm>;

bool operator==(const CossicFactor& a, const CossicFactor& b);
bool operator==(const CossicTerm& a, const CossicTerm& b);

struct CossicEquation {
    /// "x is an n-gonal root of lhs"; only allowed without a right side.
    std::optional<BigInt> polygonal_n;
    CossicSum lhs;
    std::optional<CossicSum> rhs;
    friend bool operator==(const CossicEquation&, const CossicEquation&) = default;
};

/// Symbol for x^k (`R`, `Z`, ..., `CSS`); `N` for k = 0. Throws for k > 11.
std::string power_symbol(unsigned k);

/// Throws ParseError with position and expected tokens.
CossicEquation parse_equation(std::string_view text);

struct ExpandedEquation {
    Polynomial lhs;
    Polynomial rhs;
};

ExpandedEquation expand_to_polynomial(const CossicEquation& e);

Polynomial expand(const CossicSum& s);

/// lhs - rhs, or lhs - O_n for a polygonal statement, normalized to be monic.
StandardForm standard_form(const CossicEquation& e);

/// Canonical text; parse_equation(print_equation(e)) == e.
std::string print_equation(const CossicEquation& e);

std::string print_sum(const CossicSum& s);

/// Descending powers with explicit coefficients: [0, -2701, 2702] gives
/// `2702Z - 2701R`; zero gives `0`.
CossicSum from_polynomial(const Polynomial& p);

}  // namespace rothcoss
