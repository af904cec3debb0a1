#include "stokes/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "stokes/oracle.hpp"

namespace stokes {

namespace {

void write_certificate(const StokesCertificate& cert, const std::string& path) {
    std::string text = to_json(cert);
    if (!path.empty()) {
        std::ofstream out(path);
        if (!out) throw Error("cannot open certificate output file: " + path);
        out << text;
    } else {
        std::cout << text;
    }
}

}  // namespace

StokesCertificate run_pipeline(const RunConfig& cfg) {
    ProblemSpec p = problem_by_name(cfg.problem);
    StokesCertificate cert;
    cert.problem = p.name;
    cert.shooting = cfg.shooting;
    cert.integrator = cfg.integrator;
    cert.search = cfg.search;

    cert.thresholds = find_thresholds(p, cfg.search);
    if (cfg.mode == RunMode::Thresholds) {
        cert.mode = "thresholds";
        cert.table = verify_at(p, Interval(cert.thresholds.rho0));
        cert.conclusion = Conclusion::Inconclusive;
        cert.notes.push_back("thresholds-only run; no shooting performed");
        return cert;
    }

    DeltaEnclosure d = enclose_delta(p, cfg.shooting, cert.thresholds, cfg.integrator);
    cert.delta = d;

    // Steps 7-8 at the validated crossing height
    cert.table = verify_at(p, d.rho_star_enc);
    ComplexInterval k0 = kappa0(p, d.rho_star_enc, d.delta_phi);
    cert.kappa = k0;
    ComplexInterval tb = theta_basic(k0, cert.table.mbar);
    cert.theta_basic_enc = tb;

    if (cfg.mode == RunMode::Refine) {
        cert.mode = "refine";
        cert.refinement = refinement_breakdown(p, cert.table, d.rho_star_enc, k0);
        cert.theta_refined_enc = theta_refined(p, cert.table, d.rho_star_enc, k0);
        cert.notes.push_back(
            "tail bound ES uses the modulus of kappa0 (the disc bound is "
            "enclosed by the circumscribed rectangle)");
    } else {
        cert.mode = "verify";
    }

    bool nonzero = d.nonzero_certified || !tb.contains_zero();
    cert.conclusion = nonzero ? Conclusion::NonzeroCertified : Conclusion::Inconclusive;
    return cert;
}

OracleReport run_oracle(const RunConfig& cfg) {
    ProblemSpec p = problem_by_name(cfg.problem);
    RhoThresholds th = find_thresholds(p, cfg.search);
    double m0 = m0_bound(p, Interval(th.rho_star)).hi();
    (void)m0;

    const ShootingConfig& sc = cfg.shooting;
    std::array<double, 6> start_m{0, 0, 0, 0, sc.s_minus_re, -sc.s_minus_im};
    std::array<double, 6> start_p{0, 0, 0, 0, sc.s_plus_re, -sc.rho_bar};
    OracleHit hm = oracle_to_section(p, start_m, Direction::Forward, cfg.integrator.order);
    OracleHit hp = oracle_to_section(p, start_p, Direction::Backward, cfg.integrator.order);

    OracleReport r;
    r.rho_star = -hm.state[5];
    r.delta_phi_re = hp.state[0] - hm.state[0];
    r.delta_phi_im = hp.state[1] - hm.state[1];
    double e = std::exp(r.rho_star) / r.rho_star;
    // kappa0 = i e^rho dphi / rho (h0 = 0 for the built-in problems)
    r.kappa0_re = -e * r.delta_phi_im;
    r.kappa0_im = e * r.delta_phi_re;
    r.theta_basic_re = r.kappa0_re;
    r.theta_basic_im = r.kappa0_im;

    if (p.refinement) {
        RefinementSeries rs = refinement_series(*p.refinement);
        double corr = 0.0;
        for (int k = 4; k <= 7; ++k) {
            auto c = rs.integrand.at(k);
            int m = ((k - 1) % 4 + 4) % 4;
            double w = (m == 0)   ? static_cast<double>(c.first)
                       : (m == 1) ? static_cast<double>(-c.second)
                       : (m == 2) ? static_cast<double>(-c.first)
                                  : static_cast<double>(c.second);
            corr += w / ((k - 1) * std::pow(r.rho_star, k - 1));
        }
        r.has_refined = true;
        r.theta_refined_re = r.kappa0_re * (1.0 + corr);
        r.theta_refined_im = r.kappa0_im * (1.0 + corr);
    }
    return r;
}

int run_cli(const RunConfig& cfg) {
    try {
        if (cfg.mode == RunMode::Oracle) {
            OracleReport r = run_oracle(cfg);
            std::printf("NON-RIGOROUS oracle estimates (midpoint arithmetic):\n");
            std::printf("  rho*        ~ %.12g\n", r.rho_star);
            std::printf("  Delta phi   ~ %.12g + %.12g i\n", r.delta_phi_re, r.delta_phi_im);
            std::printf("  kappa0      ~ %.12g + %.12g i\n", r.kappa0_re, r.kappa0_im);
            std::printf("  Theta       ~ %.12g + %.12g i  (basic, NON-RIGOROUS)\n",
                        r.theta_basic_re, r.theta_basic_im);
            if (r.has_refined)
                std::printf("  Theta       ~ %.12g + %.12g i  (refined, NON-RIGOROUS)\n",
                            r.theta_refined_re, r.theta_refined_im);
            return 0;
        }
        StokesCertificate cert = run_pipeline(cfg);
        write_certificate(cert, cfg.out_path);
        if (cfg.mode == RunMode::Thresholds) return 0;
        return cert.conclusion == Conclusion::NonzeroCertified ? 0 : 2;
    } catch (const ThresholdError& e) {
        std::fprintf(stderr, "threshold gate failure: %s\n", e.what());
        return 3;
    } catch (const SearchExhausted& e) {
        std::fprintf(stderr, "threshold search failure: %s\n", e.what());
        return 3;
    } catch (const BolzanoFailure& e) {
        std::fprintf(stderr, "ordering verification failure: %s\n", e.what());
        return 3;
    } catch (const PreconditionError& e) {
        std::fprintf(stderr, "precondition failure: %s\n", e.what());
        return 3;
    } catch (const WrappingFailure& e) {
        std::fprintf(stderr, "integrator failure: %s\n", e.what());
        return 4;
    } catch (const NoCrossing& e) {
        std::fprintf(stderr, "integrator failure: %s\n", e.what());
        return 4;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "integrator failure: %s\n", e.what());
        return 4;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}

}  // namespace stokes
