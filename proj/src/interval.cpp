#include "rothcoss/interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rothcoss {

Interval::Interval(mpfr_prec_t precision) : precision_(precision) {
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& value, mpfr_prec_t precision) : Interval(precision) {
    mpfr_set_q(lo_, value.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, value.raw().get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval(other.precision_) {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision_) { swap(*this, other); }

Interval& Interval::operator=(Interval other) noexcept {
    swap(*this, other);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void swap(Interval& a, Interval& b) noexcept {
    std::swap(a.precision_, b.precision_);
    mpfr_swap(a.lo_, b.lo_);
    mpfr_swap(a.hi_, b.hi_);
}

namespace {

Rational to_rational(const mpfr_t v) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v);
    return Rational(q.get_num(), q.get_den());
}

}  // namespace

Rational Interval::lower() const { return to_rational(lo_); }
Rational Interval::upper() const { return to_rational(hi_); }

double Interval::midpoint_double() const {
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

int Interval::certain_sign() const {
    if (mpfr_sgn(lo_) > 0) {
        return 1;
    }
    if (mpfr_sgn(hi_) < 0) {
        return -1;
    }
    return 0;
}

bool Interval::narrower_than_bits(long bits) const {
    mpfr_t width;
    mpfr_init2(width, precision_);
    mpfr_sub(width, hi_, lo_, MPFR_RNDU);
    bool narrow = mpfr_zero_p(width) != 0;
    if (!narrow) {
        narrow = mpfr_get_exp(width) <= -bits;
    }
    mpfr_clear(width);
    return narrow;
}

bool Interval::disjoint_from(const Interval& other) const {
    return mpfr_less_p(hi_, other.lo_) != 0 || mpfr_less_p(other.hi_, lo_) != 0;
}

Interval Interval::operator-() const {
    Interval r(precision_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision_, b.precision_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision_, b.precision_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = std::max(a.precision_, b.precision_);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    for (const auto* x : {&a.lo_, &a.hi_}) {
        for (const auto* y : {&b.lo_, &b.hi_}) {
            mpfr_mul(t, *x, *y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_) != 0) {
                mpfr_set(r.lo_, t, MPFR_RNDD);
            }
            mpfr_mul(t, *x, *y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_) != 0) {
                mpfr_set(r.hi_, t, MPFR_RNDU);
            }
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) {
        throw std::domain_error("interval division by an interval containing zero");
    }
    const mpfr_prec_t prec = std::max(a.precision_, b.precision_);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    for (const auto* x : {&a.lo_, &a.hi_}) {
        for (const auto* y : {&b.lo_, &b.hi_}) {
            mpfr_div(t, *x, *y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_) != 0) {
                mpfr_set(r.lo_, t, MPFR_RNDD);
            }
            mpfr_div(t, *x, *y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_) != 0) {
                mpfr_set(r.hi_, t, MPFR_RNDU);
            }
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Interval Interval::clamp_nonnegative() const {
    Interval r(*this);
    if (mpfr_sgn(r.lo_) < 0) {
        mpfr_set_zero(r.lo_, 1);
    }
    if (mpfr_sgn(r.hi_) < 0) {
        mpfr_set_zero(r.hi_, 1);
    }
    return r;
}

Interval Interval::sqrt() const {
    const Interval c = clamp_nonnegative();
    Interval r(precision_);
    mpfr_sqrt(r.lo_, c.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, c.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::cbrt() const {
    Interval r(precision_);
    mpfr_cbrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_cbrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

std::string Interval::debug_string() const {
    std::ostringstream os;
    os << '[' << mpfr_get_d(lo_, MPFR_RNDD) << ", " << mpfr_get_d(hi_, MPFR_RNDU) << ']';
    return os.str();
}

}  // namespace rothcoss
