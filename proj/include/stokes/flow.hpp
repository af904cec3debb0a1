#pragma once

#include <optional>
#include <string>

#include "stokes/problem.hpp"

namespace stokes {

struct IntegratorOptions {
    int order = 20;            // Taylor order of the polynomial part
    double tol = 1e-17;        // local truncation target (absolute)
    double width_cap = 1e-3;   // hull width triggering WrappingFailure
    int subdivide = 1;         // uniform s2 subdivision of the vertical set
    double max_step = 0.8;
    double time_budget_factor = 1.5;
    std::string trace_path;    // per-step log when non-empty
};

enum class Direction { Forward, Backward };

// first intersection with the section {s1 = 0}; the s1 component of state is
// the exact point [0,0] and the remaining components enclose every
// trajectory of the start box at its own crossing time
struct SectionHit {
    StateBox state;
    Interval time;
};

// containment-sound transport of a box to its first section crossing in the
// given time direction (Forward needs s1 < 0, Backward needs s1 > 0)
SectionHit integrate_to_section(const ProblemSpec& p, const StateBox& start,
                                Direction dir, const IntegratorOptions& opt);

SectionHit poincare_minus(const ProblemSpec& p, const StateBox& pminus,
                          const IntegratorOptions& opt);
SectionHit poincare_plus(const ProblemSpec& p, const StateBox& pplus,
                         const IntegratorOptions& opt);

}  // namespace stokes
