#pragma once

#include "rothcoss/polynomial.hpp"

namespace rothcoss {

/// Number of sides of a polygonal number, n >= 3.
class PolygonalKind {
public:
    /// Throws std::invalid_argument for n < 3.
    explicit PolygonalKind(const BigInt& n);
    const BigInt& sides() const { return n_; }

private:
    BigInt n_;
};

/// O_n(x) = (n-2)/2 x^2 - (n-4)/2 x
Polynomial polygonal_poly(const PolygonalKind& k);

struct StandardForm {
    Polynomial polynomial;  ///< monic unless degenerate
    bool degenerate = false;  ///< q and O_n coincide: every x is a root
};

/// P = q - O_n, negated when needed so the leading coefficient is +1
/// (divided by it when it is not +-1).
StandardForm to_standard_form(const PolygonalKind& k, const Polynomial& q);

/// Normalizes lhs - rhs the same way, without a polygonal wrapper.
StandardForm to_standard_form(const Polynomial& difference);

}  // namespace rothcoss
