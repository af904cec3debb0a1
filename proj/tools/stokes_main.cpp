#include <CLI11.hpp>

#include "stokes/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"validated Stokes-constant enclosures for Hopf-zero inner equations"};

    stokes::RunConfig cfg;
    std::string mode = "verify";
    double re_s = 1000.0;

    app.add_option("--problem", cfg.problem, "problem name (example1|example2)")
        ->default_val("example1");
    app.add_option("--mode", mode, "verify|refine|thresholds|oracle")->default_val("verify");
    app.add_option("--out", cfg.out_path, "certificate output file (default: stdout)");

    app.add_option("--scan-start", cfg.search.scan_start, "threshold scan start");
    app.add_option("--scan-factor", cfg.search.scan_factor, "geometric scan factor");
    app.add_option("--max-iters", cfg.search.max_iters, "scan iteration cap");

    app.add_option("--order", cfg.integrator.order, "Taylor order");
    app.add_option("--tol", cfg.integrator.tol, "local truncation target");
    app.add_option("--width-cap", cfg.integrator.width_cap, "enclosure width cap");
    app.add_option("--subdivide", cfg.integrator.subdivide, "vertical-set subdivision count");
    app.add_option("--trace", cfg.integrator.trace_path, "per-step trace file");

    app.add_option("--rho-bar", cfg.shooting.rho_bar, "shooting height rho-bar");
    app.add_option("--re-s", re_s, "|Re s| of the shooting sets");
    app.add_option("--half-width", cfg.shooting.half_width,
                   "vertical half-width of the upper shooting set");

    CLI11_PARSE(app, argc, argv);

    if (mode == "verify")
        cfg.mode = stokes::RunMode::Verify;
    else if (mode == "refine")
        cfg.mode = stokes::RunMode::Refine;
    else if (mode == "thresholds")
        cfg.mode = stokes::RunMode::Thresholds;
    else if (mode == "oracle")
        cfg.mode = stokes::RunMode::Oracle;
    else {
        std::fprintf(stderr, "unknown mode: %s\n", mode.c_str());
        return 1;
    }

    cfg.shooting.s_minus_re = -re_s;
    cfg.shooting.s_plus_re = re_s;
    cfg.shooting.s_minus_im = cfg.shooting.rho_bar;

    return stokes::run_cli(cfg);
}
