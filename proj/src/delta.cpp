#include "stokes/delta.hpp"

#include <cstdlib>
#include <future>
#include <vector>

namespace stokes {

namespace {

int thread_count() {
    if (const char* env = std::getenv("STOKES_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

double xy_half_width(const Interval& m0, double re_s) {
    double r = std::fabs(re_s);
    double r3_down = rnd::mul_down(rnd::mul_down(r, r), r);
    double inv3_up = rnd::div_up(1.0, r3_down);
    return rnd::mul_up(m0.hi(), inv3_up);
}

StateBox xy_cube(double hw, const Interval& s1, const Interval& s2) {
    Interval c = Interval::unchecked(-hw, hw);
    return {c, c, c, c, s1, s2};
}

// hull of the hits of uniform s2 slabs (used when one box transport wraps)
SectionHit transport_subdivided(const ProblemSpec& p, const StateBox& box,
                                Direction dir, const IntegratorOptions& opt) {
    int n = std::max(1, opt.subdivide);
    if (n == 1 || box.s2.is_point()) return integrate_to_section(p, box, dir, opt);
    std::vector<SectionHit> hits;
    double lo = box.s2.lo(), hi = box.s2.hi();
    for (int i = 0; i < n; ++i) {
        double a = lo + (hi - lo) * i / n;
        double b = (i == n - 1) ? hi : lo + (hi - lo) * (i + 1) / n;
        StateBox slab = box;
        slab.s2 = Interval(std::min(a, b), std::max(a, b));
        hits.push_back(integrate_to_section(p, slab, dir, opt));
    }
    SectionHit out = hits.front();
    for (std::size_t i = 1; i < hits.size(); ++i) {
        out.state = hull(out.state, hits[i].state);
        out.time = hull(out.time, hits[i].time);
    }
    return out;
}

}  // namespace

ShootingSets build_shooting_sets(const ProblemSpec& p, const ShootingConfig& cfg,
                                 const Interval& m0) {
    (void)p;
    if (!(cfg.s_minus_re < 0.0 && cfg.s_plus_re > 0.0))
        throw PreconditionError("shooting requires s_minus_re < 0 < s_plus_re");
    if (!(cfg.half_width > 0.0)) throw PreconditionError("half_width must be positive");

    double hwm = xy_half_width(m0, cfg.s_minus_re);
    double hwp = xy_half_width(m0, cfg.s_plus_re);
    double s2_lo = -cfg.rho_bar - cfg.half_width;
    double s2_hi = -cfg.rho_bar + cfg.half_width;

    ShootingSets s;
    s.pminus = xy_cube(hwm, Interval(cfg.s_minus_re), Interval(-cfg.s_minus_im));
    s.pplus = xy_cube(hwp, Interval(cfg.s_plus_re), Interval(s2_lo, s2_hi));
    s.pplus_l = xy_cube(hwp, Interval(cfg.s_plus_re), Interval(s2_lo));
    s.pplus_u = xy_cube(hwp, Interval(cfg.s_plus_re), Interval(s2_hi));
    return s;
}

DeltaEnclosure enclose_delta(const ProblemSpec& p, const ShootingConfig& cfg,
                             const RhoThresholds& th, const IntegratorOptions& opt) {
    if (!(cfg.rho_bar > th.rho_star))
        throw ThresholdError("rho_bar must exceed the validated rho_star");
    if (!(th.rho_star <= std::fabs(cfg.s_minus_re)))
        throw ThresholdError("|Re s-| must be at least rho_star for the M0 ball bound");

    Interval m0 = m0_bound(p, Interval(th.rho_star));
    ShootingSets sets = build_shooting_sets(p, cfg, m0);

    DeltaEnclosure d;
    if (thread_count() > 1) {
        auto fm = std::async(std::launch::async, [&] {
            return integrate_to_section(p, sets.pminus, Direction::Forward, opt);
        });
        auto fl = std::async(std::launch::async, [&] {
            return integrate_to_section(p, sets.pplus_l, Direction::Backward, opt);
        });
        auto fu = std::async(std::launch::async, [&] {
            return integrate_to_section(p, sets.pplus_u, Direction::Backward, opt);
        });
        auto fp = std::async(std::launch::async, [&] {
            return transport_subdivided(p, sets.pplus, Direction::Backward, opt);
        });
        d.hit_minus = fm.get();
        d.hit_plus_l = fl.get();
        d.hit_plus_u = fu.get();
        d.hit_plus = fp.get();
    } else {
        d.hit_minus = integrate_to_section(p, sets.pminus, Direction::Forward, opt);
        d.hit_plus_l = integrate_to_section(p, sets.pplus_l, Direction::Backward, opt);
        d.hit_plus_u = integrate_to_section(p, sets.pplus_u, Direction::Backward, opt);
        d.hit_plus = transport_subdivided(p, sets.pplus, Direction::Backward, opt);
    }

    const Interval& sl = d.hit_plus_l.state.s2;
    const Interval& sm = d.hit_minus.state.s2;
    const Interval& su = d.hit_plus_u.state.s2;
    if (!(sl.hi() < sm.lo()))
        throw BolzanoFailure("ordering s2(P+(p_l)) < s2(P-(p-)) not certified: " +
                             to_string(sl) + " vs " + to_string(sm));
    if (!(sm.hi() < su.lo()))
        throw BolzanoFailure("ordering s2(P-(p-)) < s2(P+(p_u)) not certified: " +
                             to_string(sm) + " vs " + to_string(su));
    if (!(su.hi() < 0.0))
        throw BolzanoFailure("ordering s2(P+(p_u)) < 0 not certified: " + to_string(su));

    d.rho_star_enc = -sm;
    if (!(d.rho_star_enc.lo() >= th.rho_star))
        throw ThresholdError("crossing height fell below the validated rho_star");

    const StateBox& hp = d.hit_plus.state;
    const StateBox& hm = d.hit_minus.state;
    d.delta_phi = ComplexInterval(hp.x1 - hm.x1, hp.y1 - hm.y1);
    d.delta_varphi = ComplexInterval(hp.x2 - hm.x2, hp.y2 - hm.y2);
    d.nonzero_certified =
        !d.delta_phi.contains_zero() || !d.delta_varphi.contains_zero();
    return d;
}

}  // namespace stokes
