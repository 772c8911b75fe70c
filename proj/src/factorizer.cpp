#include "rothcoss/factorizer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rothcoss {

namespace {

bool canonical_less(const Polynomial& a, const Polynomial& b) {
    if (*a.degree() != *b.degree()) {
        return *a.degree() < *b.degree();
    }
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

void require_monic_integer(const Polynomial& p, const char* what) {
    if (!p.is_monic() || !p.has_integer_coefficients()) {
        throw std::invalid_argument(std::string(what) +
                                    " requires a monic polynomial with integer coefficients, got " +
                                    p.to_string());
    }
}

// Cauchy bound on the absolute value of any complex root of a monic polynomial.
BigInt root_bound(const Polynomial& p) {
    BigInt bound = 0;
    const unsigned n = *p.degree();
    for (unsigned k = 0; k < n; ++k) {
        const BigInt v = abs(p.coefficient(k).numerator());
        if (v > bound) {
            bound = v;
        }
    }
    return bound + 1;
}

// Nonzero integers dividing `value` with absolute value at most `limit`, ascending by magnitude.
std::vector<BigInt> bounded_divisors(const BigInt& value, const BigInt& limit) {
    std::vector<BigInt> out;
    const BigInt magnitude = abs(value);
    try {
        for (const BigInt& d : divisors(magnitude)) {
            if (d > limit) {
                break;
            }
            out.push_back(d);
        }
    } catch (const std::domain_error&) {
        // Constant too large for deterministic factoring: scan the bounded range instead.
        out.clear();
        for (BigInt d = 1; d <= limit; ++d) {
            if (mpz_divisible_p(magnitude.get_mpz_t(), d.get_mpz_t()) != 0) {
                out.push_back(d);
            }
        }
    }
    return out;
}

Polynomial linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Polynomial monic_quadratic(const BigInt& y, const BigInt& c) {
    return Polynomial({Rational(c), Rational(BigInt(-y)), Rational(1)});
}

}  // namespace

Polynomial Factorization::expand() const {
    Polynomial product = Polynomial::constant(1);
    for (const auto& f : factors) {
        product *= f.polynomial.pow(f.multiplicity);
    }
    return product;
}

std::string Factorization::to_string(char variable) const {
    if (factors.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& f : factors) {
        out += "(" + f.polynomial.to_string(variable) + ")";
        if (f.multiplicity > 1) {
            out += "^" + std::to_string(f.multiplicity);
        }
    }
    return out;
}

NotFullyFactorable::NotFullyFactorable(Factorization partial, Polynomial residual,
                                       unsigned variations)
    : std::runtime_error("no factorization into integer factors of degree <= 2: residual " +
                         residual.to_string() + " has " + std::to_string(variations) +
                         " sign variation(s)"),
      partial_(std::move(partial)),
      residual_(std::move(residual)),
      variations_(variations) {}

LinearSplit find_linear_factors(const Polynomial& p) {
    require_monic_integer(p, "find_linear_factors");
    LinearSplit split{{}, p};
    Polynomial& rest = split.cofactor;

    unsigned zero_mult = 0;
    while (rest.coefficient(0).is_zero() && *rest.degree() > 0) {
        rest = divide(rest, Polynomial::monomial(1, 1)).quotient;
        ++zero_mult;
    }
    if (zero_mult > 0) {
        split.roots.push_back({Rational(0), zero_mult});
    }
    if (*rest.degree() == 0) {
        return split;
    }
    // Rational root theorem: a monic integer polynomial has only integer roots,
    // each dividing the constant term.
    std::vector<Rational> candidates;
    for (const BigInt& d : divisors(abs(rest.coefficient(0).numerator()))) {
        candidates.emplace_back(d);
        candidates.emplace_back(BigInt(-d));
    }
    std::sort(candidates.begin(), candidates.end());
    for (const Rational& r : candidates) {
        unsigned mult = 0;
        while (*rest.degree() > 0 && rest.evaluate(r).is_zero()) {
            rest = divide(rest, linear(r)).quotient;
            ++mult;
        }
        if (mult > 0) {
            split.roots.push_back({r, mult});
        }
    }
    std::sort(split.roots.begin(), split.roots.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
    return split;
}

std::optional<BigInt> find_quadratic_factor(const Polynomial& p, const BigInt& c) {
    require_monic_integer(p, "find_quadratic_factor");
    const unsigned n = *p.degree();
    if (n < 2 || c == 0) {
        return std::nullopt;
    }
    // Long division by x^2 - y x + c with coefficients in Z[y].
    const Polynomial y_poly({Rational(0), Rational(1)});
    std::vector<Polynomial> rem;
    rem.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        rem.push_back(Polynomial::constant(p.coefficient(k)));
    }
    for (unsigned k = n; k >= 2; --k) {
        const Polynomial lead = rem[k];
        rem[k - 1] += y_poly * lead;
        rem[k - 2] -= lead * Rational(c);
        rem[k] = Polynomial{};
    }
    const Polynomial& r1 = rem[1];  // monic of degree n-1 in y
    const Polynomial& r0 = rem[0];

    // An integer root of the monic eliminant r1 divides its lowest nonzero coefficient;
    // |y| is at most twice the root bound of p since y is a sum of two roots.
    std::vector<BigInt> candidates;
    if (r1.coefficient(0).is_zero()) {
        candidates.emplace_back(0);
    }
    unsigned low = 0;
    while (r1.coefficient(low).is_zero()) {
        ++low;
    }
    const BigInt limit = 2 * root_bound(p);
    for (const BigInt& d : bounded_divisors(r1.coefficient(low).numerator(), limit)) {
        candidates.push_back(d);
        candidates.emplace_back(-d);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const BigInt& y : candidates) {
        const Rational ry(y);
        if (!r1.evaluate(ry).is_zero() || !r0.evaluate(ry).is_zero()) {
            continue;
        }
        if (divide(p, monic_quadratic(y, c)).remainder.is_zero()) {
            return y;
        }
    }
    return std::nullopt;
}

Factorization factor_completely(const Polynomial& p, std::optional<BigInt> constant_bound) {
    require_monic_integer(p, "factor_completely");
    std::vector<Polynomial> found;

    LinearSplit split = find_linear_factors(p);
    for (const auto& root : split.roots) {
        for (unsigned i = 0; i < root.multiplicity; ++i) {
            found.push_back(linear(root.value));
        }
    }
    Polynomial rest = split.cofactor;

    auto build = [&found]() {
        std::map<std::vector<Rational>, unsigned> counts;
        for (const auto& f : found) {
            ++counts[f.coefficients()];
        }
        Factorization out;
        for (const auto& [coeffs, mult] : counts) {
            out.factors.push_back({Polynomial(coeffs), mult});
        }
        std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
            return canonical_less(a.polynomial, b.polynomial);
        });
        return out;
    };

    while (*rest.degree() > 2) {
        // The cofactor has no rational root, so its constant term is nonzero.
        const BigInt constant = rest.coefficient(0).numerator();
        std::optional<Polynomial> quadratic;
        std::vector<BigInt> constants;
        for (const BigInt& d : divisors(abs(constant))) {
            if (constant_bound && d > *constant_bound) {
                continue;
            }
            constants.push_back(d);
            constants.emplace_back(-d);
        }
        for (const BigInt& c : constants) {
            if (const auto y = find_quadratic_factor(rest, c)) {
                quadratic = monic_quadratic(*y, c);
                break;
            }
        }
        if (!quadratic) {
            const unsigned variations = sign_variations(rest);
            throw NotFullyFactorable(build(), rest, variations);
        }
        rest = divide(rest, *quadratic).quotient;
        found.push_back(*quadratic);
    }
    if (*rest.degree() == 2) {
        found.push_back(rest);
    }
    return build();
}

std::vector<TrueRoot> true_roots(const Factorization& f) {
    std::vector<TrueRoot> roots;
    for (const auto& factor : f.factors) {
        const Polynomial& poly = factor.polynomial;
        if (*poly.degree() == 1) {
            const Rational r = -poly.coefficient(0);
            if (r.sign() > 0) {
                roots.push_back({QuadraticSurd(r), factor.multiplicity});
            }
            continue;
        }
        for (const auto& r : quadratic_roots(poly.coefficient(1), poly.coefficient(0))) {
            if (r.sign() > 0) {
                roots.push_back({r, factor.multiplicity});
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const TrueRoot& a, const TrueRoot& b) {
        return (a.value.to_multisurd() - b.value.to_multisurd()).sign() < 0;
    });
    return roots;
}

}  // namespace rothcoss
