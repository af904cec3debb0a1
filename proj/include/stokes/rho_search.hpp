#pragma once

#include "stokes/bounds.hpp"

namespace stokes {

// validated thresholds of the contraction argument
struct RhoThresholds {
    double rho1;      // first-iteration bound valid
    double rho2;      // derivative bounds valid (minimum-margin condition)
    double rho_star;  // L(rho) <= 1/2, existence of psi+-
    double rho0;      // A(rho) < 1/2, Stokes enclosure valid
};

struct SearchConfig {
    double scan_start = 2.05;
    double scan_factor = 1.25;
    int max_iters = 200;
};

// geometric scan + bisection; every returned threshold is re-verified by a
// direct interval check at the returned value (no monotonicity assumed)
RhoThresholds find_thresholds(const ProblemSpec& p, const SearchConfig& cfg = {});

// full constant table with every gate checked at this rho; throws
// ThresholdError naming the gate that fails
ConstantTable verify_at(const ProblemSpec& p, const Interval& rho);

}  // namespace stokes
