#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "stokes/errors.hpp"
#include "stokes/rounding.hpp"

namespace stokes {

// Closed interval [lo, hi] with outward-rounded arithmetic. Every operation
// satisfies containment: the exact result over any members of the inputs
// lies in the output. Endpoints are binary64; value semantics throughout.
class Interval {
  public:
    constexpr Interval() : lo_(0.0), hi_(0.0) {}
    constexpr Interval(double point) : lo_(point), hi_(point) {}
    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!(lo <= hi)) throw DomainError("interval endpoints out of order");
    }

    static Interval unchecked(double lo, double hi) {
        Interval r;
        r.lo_ = lo;
        r.hi_ = hi;
        return r;
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }

    bool finite() const { return std::isfinite(lo_) && std::isfinite(hi_); }
    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    double mid() const {
        double m = 0.5 * (lo_ + hi_);
        if (!std::isfinite(m)) m = 0.5 * lo_ + 0.5 * hi_;
        return std::clamp(m, lo_, hi_);
    }
    // upper bounds on width and radius
    double width() const { return rnd::sub_up(hi_, lo_); }
    double rad() const { return rnd::mul_up(0.5, width()); }
    // upper / lower bounds for |x| over the interval
    double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }
    double mig() const {
        if (contains_zero()) return 0.0;
        return std::min(std::fabs(lo_), std::fabs(hi_));
    }

    Interval operator-() const { return unchecked(-hi_, -lo_); }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return unchecked(rnd::add_down(a.lo_, b.lo_), rnd::add_up(a.hi_, b.hi_));
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return unchecked(rnd::sub_down(a.lo_, b.hi_), rnd::sub_up(a.hi_, b.lo_));
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        double dn = std::min(std::min(rnd::mul_down(a.lo_, b.lo_), rnd::mul_down(a.lo_, b.hi_)),
                             std::min(rnd::mul_down(a.hi_, b.lo_), rnd::mul_down(a.hi_, b.hi_)));
        double up = std::max(std::max(rnd::mul_up(a.lo_, b.lo_), rnd::mul_up(a.lo_, b.hi_)),
                             std::max(rnd::mul_up(a.hi_, b.lo_), rnd::mul_up(a.hi_, b.hi_)));
        return unchecked(dn, up);
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero()) throw DomainError("interval division by zero-containing interval");
        double dn = std::min(std::min(rnd::div_down(a.lo_, b.lo_), rnd::div_down(a.lo_, b.hi_)),
                             std::min(rnd::div_down(a.hi_, b.lo_), rnd::div_down(a.hi_, b.hi_)));
        double up = std::max(std::max(rnd::div_up(a.lo_, b.lo_), rnd::div_up(a.lo_, b.hi_)),
                             std::max(rnd::div_up(a.hi_, b.lo_), rnd::div_up(a.hi_, b.hi_)));
        return unchecked(dn, up);
    }

    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }
    Interval& operator/=(const Interval& o) { return *this = *this / o; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

  private:
    double lo_, hi_;
};

inline Interval hull(const Interval& a, const Interval& b) {
    return Interval::unchecked(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline Interval intersect(const Interval& a, const Interval& b) {
    if (!a.intersects(b)) throw DomainError("empty interval intersection");
    return Interval::unchecked(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

inline Interval widen(const Interval& a, double eps) {
    return Interval::unchecked(rnd::sub_down(a.lo(), eps), rnd::add_up(a.hi(), eps));
}

inline Interval abs(const Interval& a) {
    return Interval::unchecked(a.mig(), a.mag());
}

inline Interval min(const Interval& a, const Interval& b) {
    return Interval::unchecked(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

inline Interval max(const Interval& a, const Interval& b) {
    return Interval::unchecked(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline Interval sq(const Interval& a) {
    double lm = a.mig(), um = a.mag();
    return Interval::unchecked(rnd::mul_down(lm, lm), rnd::mul_up(um, um));
}

Interval sqrt(const Interval& a);
Interval pow_int(const Interval& a, int n);

// elementary functions with validated enclosures (correctly rounded
// endpoints via MPFR)
Interval exp(const Interval& a);
Interval log(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval atan2(const Interval& y, const Interval& x);
Interval pi_interval();

// exact decimal serialization of the binary64 endpoints (round-trip safe)
std::string to_decimal(double x);
std::string to_string(const Interval& a);

}  // namespace stokes
