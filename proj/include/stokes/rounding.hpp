#pragma once

#include <cmath>
#include <limits>

namespace stokes::rnd {

// Directed rounding emulated with error-free transforms: the round-to-nearest
// result is computed together with its exact residual, and the endpoint is
// nudged one step only when the residual shows the rounding went the wrong
// way. No fesetround, so all of this is thread-safe.

inline double next_up(double x) {
    if (std::isinf(x) && x > 0) return x;
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

inline double next_down(double x) {
    if (std::isinf(x) && x < 0) return x;
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

namespace detail {

// |values| below this may underflow inside fma residuals; fall back to a
// blind one-ulp nudge there.
inline constexpr double kTinyGuard = 9.33263618503219e-302;  // 2^-1000

struct SplitSum {
    double s;  // round-to-nearest sum
    double e;  // exact residual: a + b == s + e  (when s is finite)
};

inline SplitSum two_sum(double a, double b) {
    double s = a + b;
    double bv = s - a;
    double av = s - bv;
    double br = b - bv;
    double ar = a - av;
    return {s, ar + br};
}

}  // namespace detail

inline double add_down(double a, double b) {
    auto [s, e] = detail::two_sum(a, b);
    if (std::isinf(s)) return s > 0 ? std::numeric_limits<double>::max() : s;
    return e < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
    auto [s, e] = detail::two_sum(a, b);
    if (std::isinf(s)) return s < 0 ? -std::numeric_limits<double>::max() : s;
    return e > 0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
    double p = a * b;
    if (a == 0.0 || b == 0.0) return 0.0;
    if (std::isinf(p)) return p > 0 ? std::numeric_limits<double>::max() : p;
    if (std::fabs(p) < detail::kTinyGuard) return next_down(p);
    double e = std::fma(a, b, -p);  // exact: a*b == p + e
    return e < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
    double p = a * b;
    if (a == 0.0 || b == 0.0) return 0.0;
    if (std::isinf(p)) return p < 0 ? -std::numeric_limits<double>::max() : p;
    if (std::fabs(p) < detail::kTinyGuard) return next_up(p);
    double e = std::fma(a, b, -p);
    return e > 0 ? next_up(p) : p;
}

inline double div_down(double a, double b) {
    double q = a / b;
    if (a == 0.0) return 0.0;
    if (std::isinf(q)) return q > 0 ? std::numeric_limits<double>::max() : q;
    if (std::fabs(a) < detail::kTinyGuard || std::fabs(q) < detail::kTinyGuard)
        return next_down(q);
    double r = std::fma(q, b, -a);  // exact: q*b - a
    if (r == 0.0) return q;
    // true quotient below q iff (a - q b)/b < 0 iff r and b share sign
    return ((r > 0) == (b > 0)) ? next_down(q) : q;
}

inline double div_up(double a, double b) {
    double q = a / b;
    if (a == 0.0) return 0.0;
    if (std::isinf(q)) return q < 0 ? -std::numeric_limits<double>::max() : q;
    if (std::fabs(a) < detail::kTinyGuard || std::fabs(q) < detail::kTinyGuard)
        return next_up(q);
    double r = std::fma(q, b, -a);
    if (r == 0.0) return q;
    return ((r > 0) != (b > 0)) ? next_up(q) : q;
}

inline double sqrt_down(double a) {
    double r = std::sqrt(a);
    if (a < detail::kTinyGuard) return r == 0.0 ? 0.0 : next_down(r);
    double e = std::fma(r, r, -a);  // r^2 - a
    return e > 0 ? next_down(r) : r;
}

inline double sqrt_up(double a) {
    double r = std::sqrt(a);
    if (a < detail::kTinyGuard) return next_up(r);
    double e = std::fma(r, r, -a);
    return e < 0 ? next_up(r) : r;
}

}  // namespace stokes::rnd
