#pragma once

#include "stokes/flow.hpp"
#include "stokes/rho_search.hpp"

namespace stokes {

// shooting geometry (paper defaults; values are exact binary64 choices)
struct ShootingConfig {
    double s_minus_re = -1000.0;
    double s_minus_im = 16.00008679;  // stored positive: s- = (re, -im)
    double s_plus_re = 1000.0;
    double rho_bar = 16.00008679;
    double half_width = 1e-6;
};

struct ShootingSets {
    StateBox pminus, pplus, pplus_l, pplus_u;
};

// (x,y) hypercube half-width M0 |Re s|^-3 on each set, s components per the
// shooting construction
ShootingSets build_shooting_sets(const ProblemSpec& p, const ShootingConfig& cfg,
                                 const Interval& m0);

struct DeltaEnclosure {
    Interval rho_star_enc;       // = -s2 of the P-(p-) hit
    ComplexInterval delta_phi;   // Delta phi(-i rho*)
    ComplexInterval delta_varphi;
    bool nonzero_certified;
    // section hits kept for the certificate
    SectionHit hit_minus, hit_plus, hit_plus_l, hit_plus_u;
};

// runs the four transports, checks the three strict ordering inequalities,
// and returns the validated enclosures; BolzanoFailure names the failing
// comparison
DeltaEnclosure enclose_delta(const ProblemSpec& p, const ShootingConfig& cfg,
                             const RhoThresholds& th, const IntegratorOptions& opt);

}  // namespace stokes
