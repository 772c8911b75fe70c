#include "properties.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "rothcoss/corpus.hpp"
#include "rothcoss/cossic.hpp"
#include "rothcoss/factorizer.hpp"
#include "rothcoss/radical_expr.hpp"
#include "rothcoss/surd.hpp"

namespace rothcoss::properties {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, long bound, long max_den) {
    return Rational(BigInt(uniform(rng, -bound, bound)), BigInt(uniform(rng, 1, max_den)));
}

bool is_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

// Splits a monic integer quadratic with square discriminant into its linear factors.
void push_factor(std::vector<Polynomial>& out, const Polynomial& f) {
    if (*f.degree() == 2) {
        const BigInt b = f.coefficient(1).numerator();
        const BigInt c = f.coefficient(0).numerator();
        const BigInt disc = b * b - 4 * c;
        if (is_square(disc)) {
            const BigInt s = sqrt(disc);
            out.push_back(Polynomial({Rational(BigInt(b + s), BigInt(2)), 1}));
            out.push_back(Polynomial({Rational(BigInt(b - s), BigInt(2)), 1}));
            return;
        }
    }
    out.push_back(f);
}

std::vector<std::string> multiset(const std::vector<Polynomial>& factors) {
    std::vector<std::string> out;
    for (const auto& f : factors) {
        out.push_back(f.to_string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

CossicSum random_sum(Rng& rng, int depth);

CossicFactor random_factor(Rng& rng, int depth) {
    const long pick = uniform(rng, 0, depth > 0 ? 9 : 7);
    if (pick < 4) {
        const long num = uniform(rng, 0, 5000);
        const long den = uniform(rng, 0, 3) == 0 ? uniform(rng, 2, 32) : 1;
        return CossicFactor::of_number(Rational(BigInt(num), BigInt(den)));
    }
    if (pick < 8) {
        return CossicFactor::of_power(static_cast<unsigned>(uniform(rng, 0, 11)));
    }
    return CossicFactor::of_group(random_sum(rng, depth - 1));
}

CossicSum random_sum(Rng& rng, int depth) {
    CossicSum sum;
    const long terms = uniform(rng, 1, 4);
    for (long i = 0; i < terms; ++i) {
        CossicTerm t{uniform(rng, 0, 1) == 1, {}};
        const long factors = uniform(rng, 1, 3);
        for (long k = 0; k < factors; ++k) {
            t.factors.push_back(random_factor(rng, depth));
        }
        sum.push_back(std::move(t));
    }
    return sum;
}

RadicalExpr random_expr(Rng& rng, int depth) {
    if (depth == 0 || uniform(rng, 0, 3) == 0) {
        return RadicalExpr(uniform(rng, 0, 500));
    }
    switch (uniform(rng, 0, 6)) {
        case 0:
            return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
        case 1:
            return random_expr(rng, depth - 1) - random_expr(rng, depth - 1);
        case 2:
            return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
        case 3:
            return random_expr(rng, depth - 1) / random_expr(rng, depth - 1);
        case 4:
            return -random_expr(rng, depth - 1);
        case 5:
            return sqrt(random_expr(rng, depth - 1));
        default:
            return cbrt(random_expr(rng, depth - 1));
    }
}

const std::vector<long> kSquarefree{2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30, 33, 35};

}  // namespace

Outcome factorization_recomposition(std::size_t cases, std::uint64_t seed) {
    Rng rng(seed);
    Outcome out;
    for (; out.cases < cases; ++out.cases) {
        std::vector<Polynomial> parts;
        unsigned degree = 0;
        const unsigned target = static_cast<unsigned>(uniform(rng, 1, 6));
        while (degree < target) {
            const bool quadratic = degree + 2 <= target && uniform(rng, 0, 1) == 1;
            if (quadratic) {
                parts.push_back(Polynomial({uniform(rng, -50, 50), uniform(rng, -30, 30), 1}));
                degree += 2;
            } else {
                parts.push_back(Polynomial({uniform(rng, -50, 50), 1}));
                degree += 1;
            }
        }
        Polynomial p = Polynomial::constant(1);
        std::vector<Polynomial> expected;
        for (const auto& f : parts) {
            p *= f;
            push_factor(expected, f);
        }
        try {
            const Factorization f = factor_completely(p);
            std::vector<Polynomial> got;
            for (const auto& factor : f.factors) {
                for (unsigned k = 0; k < factor.multiplicity; ++k) {
                    got.push_back(factor.polynomial);
                }
                if (*factor.polynomial.degree() == 2) {
                    const BigInt b = factor.polynomial.coefficient(1).numerator();
                    const BigInt c = factor.polynomial.coefficient(0).numerator();
                    if (is_square(b * b - 4 * c)) {
                        out.failures.push_back(p.to_string() + ": reducible factor " + factor.polynomial.to_string());
                    }
                }
            }
            if (f.expand() != p) {
                out.failures.push_back(p.to_string() + ": recomposition gives " + f.expand().to_string());
            } else if (multiset(got) != multiset(expected)) {
                out.failures.push_back(p.to_string() + ": factors " + f.to_string());
            }
        } catch (const std::exception& e) {
            out.failures.push_back(p.to_string() + ": " + e.what());
        }
    }
    return out;
}

Outcome divisor_oracle(std::size_t cases, std::uint64_t seed) {
    Rng rng(seed);
    Outcome out;
    for (; out.cases < cases; ++out.cases) {
        const long n = out.cases < 100 ? static_cast<long>(out.cases) + 1 : uniform(rng, 1, 1000000);
        std::vector<BigInt> brute;
        for (long d = 1; d <= n; ++d) {
            if (n % d == 0) {
                brute.push_back(d);
            }
        }
        if (divisors(n) != brute) {
            out.failures.push_back("divisors(" + std::to_string(n) + ")");
        }
        BigInt product = 1;
        for (const auto& [prime, exponent] : factorize(n)) {
            if (!is_prime(prime)) {
                out.failures.push_back("factorize(" + std::to_string(n) + ") lists a composite");
            }
            BigInt power;
            mpz_pow_ui(power.get_mpz_t(), prime.get_mpz_t(), exponent);
            product *= power;
        }
        if (product != n) {
            out.failures.push_back("factorize(" + std::to_string(n) + ") does not recompose");
        }
    }
    return out;
}

Outcome cossic_round_trip(std::size_t cases, std::uint64_t seed) {
    Rng rng(seed);
    Outcome out;
    for (; out.cases < cases; ++out.cases) {
        CossicEquation eq;
        if (out.cases % 3 == 0) {
            // Canonical polynomial printing with random rational coefficients.
            std::vector<Rational> coeffs;
            const long degree = uniform(rng, 0, 11);
            for (long k = 0; k <= degree; ++k) {
                coeffs.push_back(uniform(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, 20000, 32));
            }
            eq.lhs = from_polynomial(Polynomial(coeffs));
        } else {
            eq.lhs = random_sum(rng, 2);
        }
        const long shape = uniform(rng, 0, 2);
        if (shape == 1) {
            eq.rhs = random_sum(rng, 1);
        } else if (shape == 2) {
            eq.polygonal_n = BigInt(uniform(rng, 3, 20000));
        }
        const std::string text = print_equation(eq);
        try {
            const CossicEquation back = parse_equation(text);
            if (!(back == eq)) {
                out.failures.push_back("round trip changed " + text + " into " + print_equation(back));
            }
            if (expand(back.lhs) != expand(eq.lhs)) {
                out.failures.push_back("expansion changed for " + text);
            }
        } catch (const std::exception& e) {
            out.failures.push_back(text + ": " + e.what());
        }
    }
    return out;
}

Outcome radical_round_trip(std::size_t cases, std::uint64_t seed) {
    Rng rng(seed);
    Outcome out;
    for (; out.cases < cases; ++out.cases) {
        const RadicalExpr e = random_expr(rng, 4);
        const std::string text = e.to_string();
        try {
            const RadicalExpr back = RadicalExpr::parse(text);
            if (!(back == e)) {
                out.failures.push_back("round trip changed " + text + " into " + back.to_string());
            }
        } catch (const std::exception& ex) {
            out.failures.push_back(text + ": " + ex.what());
        }
    }
    return out;
}

Outcome denest_squares(std::size_t cases, std::uint64_t seed) {
    Rng rng(seed);
    Outcome out;
    for (; out.cases < cases; ++out.cases) {
        const long m = kSquarefree[static_cast<std::size_t>(uniform(rng, 0, kSquarefree.size() - 1))];
        QuadraticSurd inner;
        bool must_denest = false;
        if (out.cases % 2 == 0) {
            const QuadraticSurd root(random_rational(rng, 40, 6), random_rational(rng, 40, 6), m);
            inner = root * root * QuadraticSurd(Rational(uniform(rng, 1, 9)).pow(2));
            must_denest = true;
        } else {
            const Rational b = random_rational(rng, 60, 4);
            const Rational a = b.abs() * Rational(m) + Rational(uniform(rng, 0, 500));
            inner = QuadraticSurd(a, b, m);
        }
        if (inner.sign() < 0) {
            out.failures.push_back("generated a negative surd " + inner.to_string());
            continue;
        }
        const NestedRadical r = sqrt_of_surd(inner);
        if (r.square() != inner.to_multisurd()) {
            out.failures.push_back("sqrt_of_surd(" + inner.to_string() + ") squares to " + r.square().to_string());
        }
        const auto d = denest(r);
        if (must_denest && !d) {
            out.failures.push_back("no denesting for sqrt(" + inner.to_string() + ")");
        }
        if (d && (!(*d * *d == inner) || d->sign() < 0)) {
            out.failures.push_back("denest(sqrt(" + inner.to_string() + ")) = " + d->to_string());
        }
        const auto ms = inner.to_multisurd().sqrt();
        if (must_denest && !ms) {
            out.failures.push_back("MultiSurd::sqrt missed " + inner.to_string());
        }
        if (ms && (*ms * *ms != inner.to_multisurd() || ms->sign() < 0)) {
            out.failures.push_back("MultiSurd::sqrt(" + inner.to_string() + ") = " + ms->to_string());
        }
    }
    return out;
}

Outcome descartes_bound(const std::string& corpus_path) {
    Outcome out;
    for (const auto& p : load_corpus(corpus_path).problems) {
        for (const bool patched : {true, false}) {
            Problem copy = p;
            if (!patched) {
                copy.patches.clear();
            }
            const StandardForm sf = standard_form(parse_equation(patched_equation(copy)));
            if (sf.degenerate) {
                continue;
            }
            Polynomial poly = sf.polynomial;
            if (p.scale > 1) {
                poly = scale_substitute(poly, p.scale);
            }
            ++out.cases;
            try {
                unsigned positive = 0;
                for (const auto& r : true_roots(factor_completely(poly))) {
                    positive += r.multiplicity;
                }
                if (positive > sign_variations(poly)) {
                    out.failures.push_back(p.id + ": " + std::to_string(positive) + " true roots");
                }
            } catch (const NotFullyFactorable& e) {
                if (e.sign_variations() > sign_variations(poly)) {
                    out.failures.push_back(p.id + ": residual has more variations than the polynomial");
                }
            }
        }
    }
    return out;
}

}  // namespace rothcoss::properties
