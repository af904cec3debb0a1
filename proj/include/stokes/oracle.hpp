#pragma once

#include <array>

#include "stokes/flow.hpp"

namespace stokes {

// plain floating-point transport to the section (same vector-field code as
// the rigorous path, point arithmetic, adaptive Taylor steps); exploration
// and cross-checks only
struct OracleHit {
    std::array<double, 6> state;  // s1 == 0 up to Newton tolerance
    double time;
};

OracleHit oracle_to_section(const ProblemSpec& p, const std::array<double, 6>& start,
                            Direction dir, int order = 20, double tol = 1e-16);

}  // namespace stokes
