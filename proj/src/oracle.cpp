#include "stokes/oracle.hpp"

#include <cmath>

#include "stokes/taylor.hpp"

namespace stokes {

OracleHit oracle_to_section(const ProblemSpec& p, const std::array<double, 6>& start,
                            Direction dir, int order, double tol) {
    double sign = (dir == Direction::Forward) ? 1.0 : -1.0;
    FieldTape<double> tape(p.field_kind, order);
    std::array<double, 6> y = start;
    double t = 0.0;
    double budget = 1.5 * (std::fabs(start[4]) + 100.0);

    std::array<std::vector<double>, 6> jets;
    auto eval = [&](int comp, double h) {
        double acc = jets[comp][order];
        for (int k = order - 1; k >= 0; --k) acc = acc * h + jets[comp][k];
        return acc;
    };
    auto eval_d = [&](int comp, double h) {
        double acc = order * jets[comp][order];
        for (int k = order - 1; k >= 1; --k) acc = acc * h + k * jets[comp][k];
        return acc;
    };

    while (std::fabs(t) < budget) {
        flow_jets(tape, y, order, jets);
        double top = 0.0;
        for (int i = 0; i < 6; ++i) top = std::max(top, std::fabs(jets[i][order]));
        double h = 0.8;
        if (top > 0.0) h = std::min(h, std::pow(tol / top, 1.0 / order));
        double dist = sign > 0 ? -y[4] : y[4];
        if (dist < h) {
            // Newton solve for the crossing time on the current polynomial
            double tau = sign * dist;
            for (int it = 0; it < 50; ++it) {
                double g = eval(4, tau);
                double dg = eval_d(4, tau);
                double step = g / dg;
                tau -= step;
                if (std::fabs(step) < 1e-18 * (1.0 + std::fabs(tau))) break;
            }
            OracleHit hit;
            for (int i = 0; i < 6; ++i) hit.state[i] = eval(i, tau);
            hit.state[4] = 0.0;
            hit.time = t + tau;
            return hit;
        }
        double hs = sign * std::min(h, std::max(dist - 0.5 * h, 0.25 * h));
        for (int i = 0; i < 6; ++i) y[i] = eval(i, hs);
        t += hs;
    }
    throw NoCrossing("oracle transport exhausted its time budget");
}

}  // namespace stokes
