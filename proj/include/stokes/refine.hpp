#pragma once

#include <vector>

#include "stokes/bounds.hpp"
#include "stokes/complex_interval.hpp"

namespace stokes {

// kappa0(rho) = i e^{alpha (rho - i h0 log rho - h0 pi/2)} DeltaPhi(-i rho)/rho
ComplexInterval kappa0(const ProblemSpec& p, const Interval& rho,
                       const ComplexInterval& delta_phi);

// Theta in kappa0 (1 + g), |g| <= Mbar, enclosed by the circumscribed
// axis-aligned rectangle
ComplexInterval theta_basic(const ComplexInterval& k0, const Interval& mbar);

// Gaussian-integer Laurent polynomial in 1/s: coefficient k is the (re, im)
// pair multiplying s^{-k}
struct ExactSeries {
    int lowest_power = 0;
    std::vector<std::pair<long long, long long>> coeff;

    std::pair<long long, long long> at(int power) const {
        int i = power - lowest_power;
        if (i < 0 || i >= static_cast<int>(coeff.size())) return {0, 0};
        return coeff[static_cast<std::size_t>(i)];
    }
};

// exact products of the asymptotic series: phi* x varphi*, and the kept
// integrand 2 phi* varphi* s^2 (i - 1/s) + varphi*/s
struct RefinementSeries {
    ExactSeries product;    // phi* varphi*
    ExactSeries integrand;  // the kept K11 main term
};
RefinementSeries refinement_series(const RefinementData& data);

// the refined Stokes enclosure (series factor from the exact integrand, tail
// and linearization errors inflating the rectangle)
ComplexInterval theta_refined(const ProblemSpec& p, const ConstantTable& table,
                              const Interval& rho, const ComplexInterval& k0);

// pieces of the refined bound, exposed for the certificate and tests
struct RefinementBreakdown {
    Interval series_factor;
    Interval es_bound;      // |ES|
    Interval etheta_bound;  // |E_Theta|
    Interval mstar;
};
RefinementBreakdown refinement_breakdown(const ProblemSpec& p, const ConstantTable& table,
                                         const Interval& rho, const ComplexInterval& k0);

}  // namespace stokes
