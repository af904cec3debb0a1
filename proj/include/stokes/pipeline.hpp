#pragma once

#include "stokes/certificate.hpp"

namespace stokes {

enum class RunMode { Verify, Refine, Thresholds, Oracle };

struct RunConfig {
    std::string problem = "example1";
    RunMode mode = RunMode::Verify;
    ShootingConfig shooting{};
    IntegratorOptions integrator{};
    SearchConfig search{};
    std::string out_path;  // certificate file; empty writes to stdout only
};

struct OracleReport {
    double rho_star = 0.0;
    double delta_phi_re = 0.0, delta_phi_im = 0.0;
    double kappa0_re = 0.0, kappa0_im = 0.0;
    double theta_basic_re = 0.0, theta_basic_im = 0.0;
    bool has_refined = false;
    double theta_refined_re = 0.0, theta_refined_im = 0.0;
};

// full pipeline per mode; throws the module errors on failure
StokesCertificate run_pipeline(const RunConfig& cfg);

// the non-rigorous estimate pipeline (midpoint arithmetic)
OracleReport run_oracle(const RunConfig& cfg);

// exit codes: 0 certified, 2 inconclusive, 3 threshold/gate failure,
// 4 integrator failure
int run_cli(const RunConfig& cfg);

}  // namespace stokes
