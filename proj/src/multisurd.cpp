#include "rothcoss/multisurd.hpp"

#include <stdexcept>

namespace rothcoss {

namespace {

constexpr int kDenestDepth = 6;
constexpr mpfr_prec_t kMaxSignPrecision = mpfr_prec_t{1} << 20;

std::optional<MultiSurd> sqrt_search(const MultiSurd& x, int depth);

}  // namespace

MultiSurd::MultiSurd(const Rational& q) {
    if (!q.is_zero()) {
        terms_.emplace(BigInt(1), q);
    }
}

MultiSurd MultiSurd::sqrt_of(const Rational& coefficient, const BigInt& radicand) {
    if (radicand < 0) {
        throw std::domain_error("square root of negative integer " + radicand.get_str());
    }
    MultiSurd r;
    if (radicand == 0 || coefficient.is_zero()) {
        return r;
    }
    const SquareSplit split = split_square(radicand);
    r.add_term(split.squarefree, coefficient * Rational(split.root));
    return r;
}

MultiSurd MultiSurd::sqrt_of(const Rational& q) {
    if (q.sign() < 0) {
        throw std::domain_error("square root of negative rational " + q.to_string());
    }
    // sqrt(a/b) = sqrt(a*b) / b
    return sqrt_of(Rational(1, q.denominator()), q.numerator() * q.denominator());
}

void MultiSurd::add_term(const BigInt& radicand, const Rational& coefficient) {
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(radicand, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

bool MultiSurd::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::optional<Rational> MultiSurd::as_rational() const {
    if (!is_rational()) {
        return std::nullopt;
    }
    return rational_part();
}

Rational MultiSurd::rational_part() const { return coefficient(BigInt(1)); }

Rational MultiSurd::coefficient(const BigInt& radicand) const {
    const auto it = terms_.find(radicand);
    return it == terms_.end() ? Rational{} : it->second;
}

std::set<BigInt> MultiSurd::primes() const {
    std::set<BigInt> out;
    for (const auto& [s, c] : terms_) {
        if (s == 1) {
            continue;
        }
        for (const auto& pp : factorize(s)) {
            out.insert(pp.prime);
        }
    }
    return out;
}

std::set<BigInt> MultiSurd::radicands() const {
    std::set<BigInt> out;
    for (const auto& [s, c] : terms_) {
        if (s != 1) {
            out.insert(s);
        }
    }
    return out;
}

MultiSurd MultiSurd::operator-() const {
    MultiSurd r = *this;
    for (auto& [s, c] : r.terms_) {
        c = -c;
    }
    return r;
}

MultiSurd& MultiSurd::operator+=(const MultiSurd& rhs) {
    for (const auto& [s, c] : rhs.terms_) {
        add_term(s, c);
    }
    return *this;
}

MultiSurd& MultiSurd::operator-=(const MultiSurd& rhs) { return *this += -rhs; }

MultiSurd& MultiSurd::operator*=(const MultiSurd& rhs) {
    MultiSurd product;
    for (const auto& [s, c] : terms_) {
        for (const auto& [t, d] : rhs.terms_) {
            // sqrt(s) sqrt(t) = g sqrt(s t / g^2) with g = gcd(s, t)
            const BigInt g = gcd(s, t);
            product.add_term(BigInt((s / g) * (t / g)), c * d * Rational(g));
        }
    }
    terms_ = std::move(product.terms_);
    return *this;
}

MultiSurd& MultiSurd::operator/=(const MultiSurd& rhs) { return *this *= rhs.inverse(); }

MultiSurd MultiSurd::conjugate(const BigInt& prime) const {
    MultiSurd r = *this;
    for (auto& [s, c] : r.terms_) {
        if (mpz_divisible_p(s.get_mpz_t(), prime.get_mpz_t()) != 0) {
            c = -c;
        }
    }
    return r;
}

MultiSurd MultiSurd::inverse() const {
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    MultiSurd norm = *this;
    MultiSurd cofactor(Rational(1));
    while (!norm.is_rational()) {
        const BigInt p = *norm.primes().rbegin();
        const MultiSurd c = norm.conjugate(p);
        cofactor *= c;
        norm *= c;
    }
    return cofactor * MultiSurd(norm.rational_part().reciprocal());
}

Interval MultiSurd::enclose(mpfr_prec_t precision) const {
    Interval sum(Rational{}, precision);
    for (const auto& [s, c] : terms_) {
        Interval term(c, precision);
        if (s != 1) {
            term = term * Interval(Rational(s), precision).sqrt();
        }
        sum = sum + term;
    }
    return sum;
}

int MultiSurd::sign() const {
    if (is_rational()) {
        return rational_part().sign();
    }
    for (mpfr_prec_t prec = 64; prec <= kMaxSignPrecision; prec *= 2) {
        const int s = enclose(prec).certain_sign();
        if (s != 0) {
            return s;
        }
    }
    throw std::logic_error("sign of a nonzero multiquadratic number did not resolve");
}

std::optional<MultiSurd> MultiSurd::sqrt() const { return sqrt_search(*this, kDenestDepth); }

std::string MultiSurd::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [s, c] : terms_) {
        const Rational mag = c.abs();
        if (c.sign() < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (s == 1) {
            out += mag.to_string();
            continue;
        }
        const BigInt num = mag.numerator();
        const BigInt den = mag.denominator();
        if (num != 1) {
            out += num.get_str() + "*";
        }
        out += "sqrt(" + s.get_str() + ")";
        if (den != 1) {
            out += "/" + den.get_str();
        }
    }
    return out;
}

namespace {

// Writes x = A + B sqrt(p) and looks for u + v sqrt(p) squaring to it:
// u^2 + p v^2 = A, 2 u v = B, hence A^2 - p B^2 = (u^2 - p v^2)^2.
std::optional<MultiSurd> sqrt_search(const MultiSurd& x, int depth) {
    if (x.is_zero()) {
        return MultiSurd{};
    }
    if (const auto q = x.as_rational()) {
        if (q->sign() < 0) {
            return std::nullopt;
        }
        return MultiSurd::sqrt_of(*q);
    }
    if (depth == 0 || x.sign() < 0) {
        return std::nullopt;
    }
    const BigInt p = *x.primes().rbegin();
    MultiSurd a;
    MultiSurd b;
    for (const auto& [s, c] : x.terms()) {
        if (mpz_divisible_p(s.get_mpz_t(), p.get_mpz_t()) != 0) {
            b += MultiSurd::sqrt_of(c, BigInt(s / p));
        } else {
            a += MultiSurd::sqrt_of(c, s);
        }
    }
    const MultiSurd discriminant = a * a - MultiSurd(Rational(p)) * b * b;
    const auto root = sqrt_search(discriminant, depth - 1);
    if (!root) {
        return std::nullopt;
    }
    const MultiSurd sqrt_p = MultiSurd::sqrt_of(Rational(1), p);
    for (const int branch : {1, -1}) {
        const MultiSurd half = (a + MultiSurd(Rational(branch)) * *root) * MultiSurd(Rational(1, 2));
        if (half.is_zero()) {
            continue;
        }
        const auto u = sqrt_search(half, depth - 1);
        if (!u || u->is_zero()) {
            continue;
        }
        const MultiSurd v = b / (MultiSurd(Rational(2)) * *u);
        MultiSurd y = *u + v * sqrt_p;
        if (y * y == x) {
            return y.sign() < 0 ? -y : y;
        }
    }
    return std::nullopt;
}

}  // namespace

}  // namespace rothcoss
