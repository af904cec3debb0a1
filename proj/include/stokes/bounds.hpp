#pragma once

#include <array>

#include "stokes/problem.hpp"

namespace stokes {

// B_m = integral_0^inf (t^2+1)^(-m/2) dt, closed form via double factorials
Interval b_constant(int m);

// C_nu = (nu+2)^((nu+2)/2) / (alpha (nu+1)^((nu+1)/2)), valid for nu >= 4
Interval c_constant(int nu, const Interval& alpha);

Interval c0_bound(const ProblemSpec& p, const Interval& rho);
Interval m0_bound(const ProblemSpec& p, const Interval& rho);

struct MMatrix {
    std::array<Interval, 4> m11;  // M11_1 .. M11_4
    std::array<Interval, 3> m12;  // M12_2 .. M12_4
};
MMatrix m_matrix(const ProblemSpec& p, const Interval& rho);

struct LipschitzBounds {
    Interval l1, l2, l;
};
LipschitzBounds lipschitz(const ProblemSpec& p, const Interval& rho);

struct ContractionBounds {
    Interval a1, a2, a;
};
ContractionBounds contraction_a(const ProblemSpec& p, const Interval& rho);

// Mbar = A1 / (1 - A); requires a.hi < 1
Interval relative_error(const Interval& a1, const Interval& a);

// every rho-dependent validated bound at one rho
struct ConstantTable {
    Interval rho;
    Interval c0, m0;
    std::array<Interval, 4> m11;
    std::array<Interval, 3> m12;
    Interval l1, l2, l;
    Interval a1, a2, a;
    Interval mbar;
};

// assembles the table; preconditions of each stage are enforced, the
// L <= 1/2 and A < 1/2 gates are NOT (see rho_search::verify_at for that)
ConstantTable constant_table(const ProblemSpec& p, const Interval& rho);

// gate predicates, all "indeterminate means false"
bool gate_rho1(const ProblemSpec& p, const Interval& rho);     // rho > max(2, CbarH0)
bool gate_min_m0(const ProblemSpec& p, const Interval& rho);   // both margins positive
bool gate_lipschitz(const ConstantTable& t);                   // L <= 1/2
bool gate_contraction(const ConstantTable& t);                 // A < 1/2

}  // namespace stokes
