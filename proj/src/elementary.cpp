#include <mpfr.h>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "stokes/interval.hpp"

namespace stokes {

namespace {

// One correctly rounded binary64 endpoint of f(x). MPFR at precision 53 with
// a directed rounding mode gives exactly the down/up neighbour of the true
// value, which is the tightest sound endpoint.
template <typename Fn>
double mpfr_endpoint(double x, mpfr_rnd_t mode, Fn f) {
    mpfr_t t;
    mpfr_init2(t, 53);
    mpfr_set_d(t, x, MPFR_RNDN);  // exact
    f(t, t, mode);
    double r = mpfr_get_d(t, mode);  // exact at 53 bits
    mpfr_clear(t);
    return r;
}

double exp_d(double x) { return mpfr_endpoint(x, MPFR_RNDD, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_exp(r, a, m); }); }
double exp_u(double x) { return mpfr_endpoint(x, MPFR_RNDU, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_exp(r, a, m); }); }
double log_d(double x) { return mpfr_endpoint(x, MPFR_RNDD, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_log(r, a, m); }); }
double log_u(double x) { return mpfr_endpoint(x, MPFR_RNDU, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_log(r, a, m); }); }
double sin_d(double x) { return mpfr_endpoint(x, MPFR_RNDD, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_sin(r, a, m); }); }
double sin_u(double x) { return mpfr_endpoint(x, MPFR_RNDU, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_sin(r, a, m); }); }
double cos_d(double x) { return mpfr_endpoint(x, MPFR_RNDD, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_cos(r, a, m); }); }
double cos_u(double x) { return mpfr_endpoint(x, MPFR_RNDU, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_cos(r, a, m); }); }

// Integers k with a <= k*pi/2 + c <= b, decided at 160-bit precision; used to
// detect interior extrema of sin/cos. Returns [kmin, kmax] (kmin > kmax when
// no such k exists).
std::array<long, 2> quarter_multiples(double a, double b, int quarter_offset) {
    mpfr_t pi2, lo, hi;
    mpfr_inits2(160, pi2, lo, hi, (mpfr_ptr) nullptr);
    mpfr_const_pi(pi2, MPFR_RNDN);
    mpfr_div_ui(pi2, pi2, 2, MPFR_RNDN);
    // k >= (a - offset*pi/2) / (pi/2) -> lower bound
    mpfr_set_d(lo, a, MPFR_RNDN);
    mpfr_set_d(hi, b, MPFR_RNDN);
    mpfr_div(lo, lo, pi2, MPFR_RNDD);
    mpfr_div(hi, hi, pi2, MPFR_RNDU);
    // shift so that sin extrema (k*pi + pi/2) and cos extrema (k*pi) unify:
    // we enumerate m with  m*pi/2 in [a,b], caller filters parity.
    long mlo = mpfr_get_si(lo, MPFR_RNDU);
    long mhi = mpfr_get_si(hi, MPFR_RNDD);
    // guard against the one-off at the boundary: widen by one on each side,
    // callers only use these to include extrema, which is always sound.
    (void)quarter_offset;
    mpfr_clears(pi2, lo, hi, (mpfr_ptr) nullptr);
    return {mlo - 1, mhi + 1};
}

bool has_extremum(double a, double b, bool for_sin, int& sign_out) {
    // extrema of sin at pi/2 + k*pi (m odd, m = 1 mod 4 -> max),
    // extrema of cos at k*pi (m even, m = 0 mod 4 -> max)
    auto [mlo, mhi] = quarter_multiples(a, b, 0);
    sign_out = 0;
    bool found_max = false, found_min = false;
    for (long m = mlo; m <= mhi; ++m) {
        bool odd = (m % 2 != 0);
        if (for_sin != odd) continue;
        // check m*pi/2 really lies in [a,b] at high precision
        mpfr_t v;
        mpfr_init2(v, 160);
        mpfr_const_pi(v, MPFR_RNDN);
        mpfr_mul_si(v, v, m, MPFR_RNDN);
        mpfr_div_ui(v, v, 2, MPFR_RNDN);
        int ge_a = mpfr_cmp_d(v, a) >= 0;
        int le_b = mpfr_cmp_d(v, b) <= 0;
        mpfr_clear(v);
        if (!(ge_a && le_b)) continue;
        long mm = ((m % 4) + 4) % 4;
        if (for_sin ? (mm == 1) : (mm == 0))
            found_max = true;
        else
            found_min = true;
    }
    sign_out = (found_max ? 1 : 0) | (found_min ? 2 : 0);
    return found_max || found_min;
}

}  // namespace

Interval sqrt(const Interval& a) {
    if (!(a.lo() > 0.0)) throw DomainError("sqrt requires a strictly positive interval");
    return Interval::unchecked(rnd::sqrt_down(a.lo()), rnd::sqrt_up(a.hi()));
}

Interval pow_int(const Interval& a, int n) {
    if (n == 0) return Interval(1.0);
    if (n < 0) return Interval(1.0) / pow_int(a, -n);
    if (n % 2 == 0) {
        Interval m = abs(a);
        double dn = 1.0, up = 1.0;
        for (int i = 0; i < n; ++i) {
            dn = rnd::mul_down(dn, m.lo());
            up = rnd::mul_up(up, m.hi());
        }
        return Interval::unchecked(dn, up);
    }
    double dn = 1.0, up = 1.0;
    for (int i = 0; i < n; ++i) {
        double ndn = std::min(rnd::mul_down(dn, a.lo()), rnd::mul_down(up, a.lo()));
        double nup = std::max(rnd::mul_up(dn, a.hi()), rnd::mul_up(up, a.hi()));
        dn = ndn;
        up = nup;
    }
    // odd powers are monotone; the min/max above covers sign flips
    return Interval::unchecked(dn, up);
}

Interval exp(const Interval& a) {
    return Interval::unchecked(exp_d(a.lo()), exp_u(a.hi()));
}

Interval log(const Interval& a) {
    if (!(a.lo() > 0.0)) throw DomainError("log requires a strictly positive interval");
    return Interval::unchecked(log_d(a.lo()), log_u(a.hi()));
}

Interval sin(const Interval& a) {
    if (!a.finite()) throw DomainError("sin of unbounded interval");
    if (a.width() >= 7.0) return Interval(-1.0, 1.0);
    double dn = std::min(sin_d(a.lo()), sin_d(a.hi()));
    double up = std::max(sin_u(a.lo()), sin_u(a.hi()));
    int s = 0;
    if (has_extremum(a.lo(), a.hi(), true, s)) {
        if (s & 1) up = 1.0;
        if (s & 2) dn = -1.0;
    }
    return Interval::unchecked(std::max(dn, -1.0), std::min(up, 1.0));
}

Interval cos(const Interval& a) {
    if (!a.finite()) throw DomainError("cos of unbounded interval");
    if (a.width() >= 7.0) return Interval(-1.0, 1.0);
    double dn = std::min(cos_d(a.lo()), cos_d(a.hi()));
    double up = std::max(cos_u(a.lo()), cos_u(a.hi()));
    int s = 0;
    if (has_extremum(a.lo(), a.hi(), false, s)) {
        if (s & 1) up = 1.0;
        if (s & 2) dn = -1.0;
    }
    return Interval::unchecked(std::max(dn, -1.0), std::min(up, 1.0));
}

Interval atan2(const Interval& y, const Interval& x) {
    // reject rectangles meeting the branch cut {x <= 0, y = 0} (this includes
    // the origin); elsewhere atan2 is monotone along every box edge, so the
    // corner hull is an enclosure.
    if (y.contains_zero() && x.lo() <= 0.0)
        throw DomainError("atan2 rectangle meets the branch cut");
    auto at = [](double yy, double xx, mpfr_rnd_t m) {
        mpfr_t ry, rx;
        mpfr_inits2(53, ry, rx, (mpfr_ptr) nullptr);
        mpfr_set_d(ry, yy, MPFR_RNDN);
        mpfr_set_d(rx, xx, MPFR_RNDN);
        mpfr_atan2(ry, ry, rx, m);
        double r = mpfr_get_d(ry, m);
        mpfr_clears(ry, rx, (mpfr_ptr) nullptr);
        return r;
    };
    double dn = std::min(std::min(at(y.lo(), x.lo(), MPFR_RNDD), at(y.lo(), x.hi(), MPFR_RNDD)),
                         std::min(at(y.hi(), x.lo(), MPFR_RNDD), at(y.hi(), x.hi(), MPFR_RNDD)));
    double up = std::max(std::max(at(y.lo(), x.lo(), MPFR_RNDU), at(y.lo(), x.hi(), MPFR_RNDU)),
                         std::max(at(y.hi(), x.lo(), MPFR_RNDU), at(y.hi(), x.hi(), MPFR_RNDU)));
    return Interval::unchecked(dn, up);
}

Interval pi_interval() {
    mpfr_t t;
    mpfr_init2(t, 53);
    mpfr_const_pi(t, MPFR_RNDD);
    double dn = mpfr_get_d(t, MPFR_RNDD);
    mpfr_const_pi(t, MPFR_RNDU);
    double up = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return Interval::unchecked(dn, up);
}

std::string to_decimal(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, end);
}

std::string to_string(const Interval& a) {
    return "[" + to_decimal(a.lo()) + ", " + to_decimal(a.hi()) + "]";
}

}  // namespace stokes
