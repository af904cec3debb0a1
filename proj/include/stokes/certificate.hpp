#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stokes/delta.hpp"
#include "stokes/refine.hpp"

namespace stokes {

enum class Conclusion { NonzeroCertified, Inconclusive };

// the machine-readable proof record: thresholds, every validated constant,
// the shooting enclosures, and the Stokes enclosures, with all endpoints as
// round-trip-safe decimal strings
struct StokesCertificate {
    std::string problem;
    std::string mode;
    RhoThresholds thresholds{};
    ConstantTable table;  // at the shooting rho
    std::optional<DeltaEnclosure> delta;
    std::optional<ComplexInterval> kappa;
    std::optional<ComplexInterval> theta_basic_enc;
    std::optional<ComplexInterval> theta_refined_enc;
    std::optional<RefinementBreakdown> refinement;
    Conclusion conclusion = Conclusion::Inconclusive;
    std::vector<std::string> notes;

    // provenance
    ShootingConfig shooting{};
    IntegratorOptions integrator{};
    SearchConfig search{};
};

std::string to_json(const StokesCertificate& cert);

const char* conclusion_name(Conclusion c);

}  // namespace stokes
