#include "rothcoss/surd.hpp"

#include <stdexcept>

namespace rothcoss {

QuadraticSurd::QuadraticSurd(const Rational& a) : a_(a) {}

QuadraticSurd::QuadraticSurd(const Rational& a, const Rational& b, const BigInt& radicand) : a_(a) {
    if (radicand < 0) {
        throw std::domain_error("negative radicand " + radicand.get_str());
    }
    if (b.is_zero() || radicand == 0) {
        return;
    }
    const SquareSplit split = split_square(radicand);
    if (split.squarefree == 1) {
        a_ += b * Rational(split.root);
        return;
    }
    b_ = b * Rational(split.root);
    m_ = split.squarefree;
}

int QuadraticSurd::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    // opposite signs: |a| vs |b| sqrt(m); equality is impossible for squarefree m >= 2
    return a_ * a_ > b_ * b_ * Rational(m_) ? sa : sb;
}

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(a_, -b_, m_); }

Rational QuadraticSurd::norm() const { return a_ * a_ - b_ * b_ * Rational(m_); }

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(-a_, -b_, m_); }

namespace {

BigInt common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational()) {
        return y.radicand();
    }
    if (y.is_rational() || x.radicand() == y.radicand()) {
        return x.radicand();
    }
    throw std::domain_error("quadratic surds over different fields: sqrt(" + x.radicand().get_str() +
                            ") and sqrt(" + y.radicand().get_str() + ")");
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    const BigInt m = common_radicand(x, y);
    return QuadraticSurd(x.a_ + y.a_, x.b_ + y.b_, m);
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    const BigInt m = common_radicand(x, y);
    return QuadraticSurd(x.a_ * y.a_ + x.b_ * y.b_ * Rational(m), x.a_ * y.b_ + x.b_ * y.a_, m);
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
    const Rational n = y.norm();
    if (n.is_zero()) {
        throw std::domain_error("division by zero surd");
    }
    return x * y.conjugate() * QuadraticSurd(n.reciprocal());
}

MultiSurd QuadraticSurd::to_multisurd() const {
    return MultiSurd(a_) + MultiSurd::sqrt_of(b_, m_);
}

std::optional<QuadraticSurd> QuadraticSurd::from_multisurd(const MultiSurd& v) {
    const auto radicands = v.radicands();
    if (radicands.size() > 1) {
        return std::nullopt;
    }
    if (radicands.empty()) {
        return QuadraticSurd(v.rational_part());
    }
    const BigInt& m = *radicands.begin();
    return QuadraticSurd(v.rational_part(), v.coefficient(m), m);
}

std::string QuadraticSurd::to_string() const { return to_multisurd().to_string(); }

std::vector<QuadraticSurd> quadratic_roots(const Rational& p, const Rational& q) {
    const Rational disc = p * p - Rational(4) * q;
    if (disc.sign() < 0) {
        return {};
    }
    // sqrt(n/d) = sqrt(n d) / d
    const Rational half = Rational(1, 2 * disc.denominator());
    const BigInt radicand = disc.numerator() * disc.denominator();
    const Rational centre = -p / Rational(2);
    return {QuadraticSurd(centre, -half, radicand), QuadraticSurd(centre, half, radicand)};
}

std::optional<Rational> NestedRadical::as_rational() const {
    if (!inner.is_rational()) {
        return std::nullopt;
    }
    const auto root = rational_sqrt(inner.rational_part());
    if (!root) {
        return std::nullopt;
    }
    return outer * *root;
}

MultiSurd NestedRadical::square() const {
    return MultiSurd(outer * outer) * inner.to_multisurd();
}

std::string NestedRadical::to_string() const {
    const std::string root = "sqrt(" + inner.to_string() + ")";
    if (outer == 1) {
        return root;
    }
    if (outer.is_integer()) {
        return outer.to_string() + "*" + root;
    }
    return "(" + outer.to_string() + ")*" + root;
}

NestedRadical sqrt_of_surd(const QuadraticSurd& s) {
    if (s.sign() < 0) {
        throw std::domain_error("square root of negative surd " + s.to_string());
    }
    if (s.sign() == 0) {
        return {Rational(1), QuadraticSurd{}};
    }
    // sqrt(s) = (1/D) sqrt(D^2 s) with D clearing both denominators.
    const Rational& a = s.rational_part();
    const Rational& b = s.surd_coefficient();
    BigInt d;
    mpz_lcm(d.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    const Rational d2 = Rational(d * d);
    const BigInt p = (a * d2).numerator();
    const BigInt q = (b * d2).numerator();
    const SquareSplit content = split_square(gcd(p, q));
    const Rational r2 = Rational(content.root * content.root);
    return {Rational(content.root, d),
            QuadraticSurd(Rational(p) / r2, Rational(q) / r2, s.radicand())};
}

std::optional<QuadraticSurd> denest(const NestedRadical& r) {
    const Rational& p = r.inner.rational_part();
    const Rational& q = r.inner.surd_coefficient();
    if (q.is_zero()) {
        if (p.is_zero()) {
            return QuadraticSurd{};
        }
        const MultiSurd root = MultiSurd::sqrt_of(p);
        return QuadraticSurd::from_multisurd(root * MultiSurd(r.outer));
    }
    const BigInt& m = r.inner.radicand();
    const auto n = rational_sqrt(p * p - q * q * Rational(m));
    if (!n) {
        return std::nullopt;
    }
    for (const Rational& half : {(p + *n) / Rational(2), (p - *n) / Rational(2)}) {
        const auto u = rational_sqrt(half);
        if (!u || u->is_zero()) {
            continue;
        }
        QuadraticSurd y(*u, q / (Rational(2) * *u), m);
        if (y * y == r.inner) {
            if (y.sign() < 0) {
                y = -y;
            }
            return y * QuadraticSurd(r.outer);
        }
    }
    return std::nullopt;
}

MultiSurd ScaledSurd::value() const {
    return MultiSurd::sqrt_of(Rational(1), scale_radicand) * surd.to_multisurd();
}

std::string ScaledSurd::to_string() const {
    if (scale_radicand == 1) {
        return surd.to_string();
    }
    return "sqrt(" + scale_radicand.get_str() + ")*(" + surd.to_string() + ")";
}

std::optional<ScaledSurd> denest_with_scale(const NestedRadical& r) {
    if (const auto direct = denest(r)) {
        return ScaledSurd{BigInt(1), *direct};
    }
    if (r.inner.is_rational()) {
        return std::nullopt;
    }
    const Rational& p = r.inner.rational_part();
    const Rational& q = r.inner.surd_coefficient();
    if (!p.is_integer() || !q.is_integer()) {
        return std::nullopt;
    }
    const BigInt content = gcd(p.numerator(), q.numerator());
    for (const BigInt& k : divisors(content)) {
        if (k == 1) {
            continue;
        }
        const NestedRadical reduced{r.outer, r.inner * QuadraticSurd(Rational(1, k))};
        if (const auto y = denest(reduced)) {
            return ScaledSurd{k, *y};
        }
    }
    return std::nullopt;
}

std::string simplified_string(const NestedRadical& r) {
    if (const auto q = r.as_rational()) {
        return q->to_string();
    }
    if (const auto s = denest_with_scale(r)) {
        return s->to_string();
    }
    return r.to_string();
}

}  // namespace rothcoss
