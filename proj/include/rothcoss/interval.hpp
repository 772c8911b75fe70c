#pragma once

#include <string>

#include <mpfr.h>

#include "rothcoss/exact_number.hpp"

namespace rothcoss {

/// Closed real interval [lo, hi] with MPFR endpoints and outward rounding.
///
/// Every operation returns an interval guaranteed to contain the exact
/// result for all operands drawn from the input intervals.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision);
    Interval(const Rational& value, mpfr_prec_t precision);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(Interval other) noexcept;
    ~Interval();

    friend void swap(Interval& a, Interval& b) noexcept;

    mpfr_prec_t precision() const { return precision_; }

    /// Exact endpoints as rationals.
    Rational lower() const;
    Rational upper() const;
    double midpoint_double() const;

    bool contains_zero() const;
    /// -1 or +1 when the whole interval is on one side of zero, 0 otherwise.
    int certain_sign() const;
    /// True when hi - lo < 2^-bits.
    bool narrower_than_bits(long bits) const;
    bool disjoint_from(const Interval& other) const;

    Interval operator-() const;
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Requires 0 not in b.
    friend Interval operator/(const Interval& a, const Interval& b);

    /// Square root of the nonnegative part; callers check the domain.
    Interval sqrt() const;
    Interval cbrt() const;

    /// Intersects with [0, inf).
    Interval clamp_nonnegative() const;

    std::string debug_string() const;

private:
    mpfr_prec_t precision_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace rothcoss
