#include "stokes/rho_search.hpp"

#include <functional>

namespace stokes {

namespace {

using Gate = std::function<bool(const ProblemSpec&, const Interval&)>;

bool gate_l(const ProblemSpec& p, const Interval& rho) {
    if (!gate_min_m0(p, rho)) return false;
    return lipschitz(p, rho).l.hi() <= 0.5;
}

bool gate_a(const ProblemSpec& p, const Interval& rho) {
    if (!gate_l(p, rho)) return false;
    return contraction_a(p, rho).a.hi() < 0.5;
}

// first grid point passing the gate, refined by bisection against the last
// failing point; condition re-verified at the returned value
double scan_for(const ProblemSpec& p, const Gate& gate, const SearchConfig& cfg,
                double from, const char* what) {
    double lo = -1.0, hi = -1.0, x = from;
    for (int i = 0; i < cfg.max_iters; ++i) {
        if (gate(p, Interval(x))) {
            hi = x;
            break;
        }
        lo = x;
        x *= cfg.scan_factor;
    }
    if (hi < 0.0)
        throw SearchExhausted(std::string("condition never verified: ") + what);
    if (lo > 0.0) {
        while (hi - lo > 1e-3) {
            double m = 0.5 * (lo + hi);
            if (gate(p, Interval(m)))
                hi = m;
            else
                lo = m;
        }
    }
    if (!gate(p, Interval(hi)))
        throw SearchExhausted(std::string("re-verification failed: ") + what);
    return hi;
}

}  // namespace

RhoThresholds find_thresholds(const ProblemSpec& p, const SearchConfig& cfg) {
    if (!(cfg.scan_start > std::max(2.0, p.ledger.cH0bar.hi())))
        throw PreconditionError("scan_start must exceed max(2, CbarH0)");
    if (!(cfg.scan_factor > 1.0))
        throw PreconditionError("scan_factor must exceed 1");

    RhoThresholds t;
    t.rho1 = scan_for(p, [](const ProblemSpec& pp, const Interval& r) { return gate_rho1(pp, r); },
                      cfg, cfg.scan_start, "rho1 (first iteration bound)");
    t.rho2 = scan_for(p, [](const ProblemSpec& pp, const Interval& r) { return gate_min_m0(pp, r); },
                      cfg, t.rho1, "rho2 (derivative-bound margins)");
    t.rho_star = scan_for(p, gate_l, cfg, t.rho2, "rho_star (L <= 1/2)");
    t.rho0 = scan_for(p, gate_a, cfg, t.rho_star, "rho0 (A < 1/2)");
    return t;
}

ConstantTable verify_at(const ProblemSpec& p, const Interval& rho) {
    if (!gate_rho1(p, rho))
        throw ThresholdError("gate rho > max(2, CbarH0) fails at rho = " + to_string(rho));
    if (!gate_min_m0(p, rho))
        throw ThresholdError("derivative-bound margin gate fails at rho = " + to_string(rho));
    ConstantTable t = constant_table(p, rho);
    if (!gate_lipschitz(t))
        throw ThresholdError("gate L <= 1/2 fails at rho = " + to_string(rho) +
                             ", L = " + to_string(t.l));
    if (!gate_contraction(t))
        throw ThresholdError("gate A < 1/2 fails at rho = " + to_string(rho) +
                             ", A = " + to_string(t.a));
    t.mbar = relative_error(t.a1, t.a);
    return t;
}

}  // namespace stokes
