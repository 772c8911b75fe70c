#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rothcoss/polynomial.hpp"
#include "rothcoss/surd.hpp"

namespace rothcoss {

struct Factor {
    Polynomial polynomial;  ///< monic, integer coefficients, degree 1 or 2
    unsigned multiplicity = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Complete factorization into monic integer linear factors and irreducible
/// quadratics, in canonical order: ascending degree, then coefficient lists
/// compared by ascending power.
struct Factorization {
    std::vector<Factor> factors;

    Polynomial expand() const;
    /// `(x+4)(x^2-4x-7)(x^2-12x+33)`; repeated factors as `(x+8)^2`.
    std::string to_string(char variable = 'x') const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Raised when no factorization into integer factors of degree <= 2 exists.
class NotFullyFactorable : public std::runtime_error {
public:
    NotFullyFactorable(Factorization partial, Polynomial residual, unsigned variations);

    /// Factors found before the search stalled.
    const Factorization& partial() const { return partial_; }
    /// Cofactor with no linear or quadratic integer factor.
    const Polynomial& residual() const { return residual_; }
    /// Descartes sign variations of the residual.
    unsigned sign_variations() const { return variations_; }

private:
    Factorization partial_;
    Polynomial residual_;
    unsigned variations_;
};

struct RationalRoot {
    Rational value;
    unsigned multiplicity;
    friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

struct LinearSplit {
    std::vector<RationalRoot> roots;  ///< ascending
    Polynomial cofactor;              ///< monic, free of rational roots
};

/// Strips every rational root (with multiplicity) from a monic integer polynomial.
LinearSplit find_linear_factors(const Polynomial& p);

/// Integer y such that x^2 - y x + c divides p exactly, if one exists.
std::optional<BigInt> find_quadratic_factor(const Polynomial& p, const BigInt& c);

/// Full factorization of a monic integer polynomial.
///
/// `constant_bound` skips quadratic constants c with |c| > bound; it only
/// speeds up a search whose answer is roughly known and is never applied
/// during verification.
Factorization factor_completely(const Polynomial& p,
                                std::optional<BigInt> constant_bound = std::nullopt);

struct TrueRoot {
    QuadraticSurd value;
    unsigned multiplicity;
};

/// Strictly positive real roots, ascending, with multiplicity.
std::vector<TrueRoot> true_roots(const Factorization& f);

}  // namespace rothcoss
