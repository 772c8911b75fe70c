#include "rothcoss/polygonal.hpp"

#include <stdexcept>

namespace rothcoss {

PolygonalKind::PolygonalKind(const BigInt& n) : n_(n) {
    if (n < 3) {
        throw std::invalid_argument("polygonal numbers need at least 3 sides, got " + n.get_str());
    }
}

Polynomial polygonal_poly(const PolygonalKind& k) {
    const Rational n(k.sides());
    return Polynomial({Rational(0), -(n - Rational(4)) / Rational(2), (n - Rational(2)) / Rational(2)});
}

StandardForm to_standard_form(const Polynomial& difference) {
    if (difference.is_zero()) {
        return {Polynomial{}, true};
    }
    Polynomial p = difference;
    p *= difference.leading().reciprocal();
    return {p, false};
}

StandardForm to_standard_form(const PolygonalKind& k, const Polynomial& q) {
    return to_standard_form(q - polygonal_poly(k));
}

}  // namespace rothcoss
