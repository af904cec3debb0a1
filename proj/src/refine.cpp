#include "stokes/refine.hpp"

namespace stokes {

namespace {

ExactSeries from_coeffs(const std::array<std::pair<long, long>, 4>& c, int lowest) {
    ExactSeries s;
    s.lowest_power = lowest;
    for (const auto& [re, im] : c) s.coeff.push_back({re, im});
    return s;
}

ExactSeries mul(const ExactSeries& a, const ExactSeries& b) {
    ExactSeries r;
    r.lowest_power = a.lowest_power + b.lowest_power;
    r.coeff.assign(a.coeff.size() + b.coeff.size() - 1, {0, 0});
    for (std::size_t i = 0; i < a.coeff.size(); ++i)
        for (std::size_t j = 0; j < b.coeff.size(); ++j) {
            auto [ar, ai] = a.coeff[i];
            auto [br, bi] = b.coeff[j];
            r.coeff[i + j].first += ar * br - ai * bi;
            r.coeff[i + j].second += ar * bi + ai * br;
        }
    return r;
}

ExactSeries add(const ExactSeries& a, const ExactSeries& b) {
    ExactSeries r;
    r.lowest_power = std::min(a.lowest_power, b.lowest_power);
    int top = std::max(a.lowest_power + static_cast<int>(a.coeff.size()),
                       b.lowest_power + static_cast<int>(b.coeff.size()));
    r.coeff.assign(static_cast<std::size_t>(top - r.lowest_power), {0, 0});
    for (int k = r.lowest_power; k < top; ++k) {
        auto [ar, ai] = a.at(k);
        auto [br, bi] = b.at(k);
        r.coeff[static_cast<std::size_t>(k - r.lowest_power)] = {ar + br, ai + bi};
    }
    return r;
}

ExactSeries shift(const ExactSeries& a, int dpow) {  // multiply by s^{-dpow}
    ExactSeries r = a;
    r.lowest_power += dpow;
    return r;
}

ExactSeries scale(const ExactSeries& a, long long re, long long im) {
    ExactSeries r = a;
    for (auto& [cr, ci] : r.coeff) {
        long long nr = cr * re - ci * im;
        long long ni = cr * im + ci * re;
        cr = nr;
        ci = ni;
    }
    return r;
}

// real part of i^{k-1} * c_k: the weight of the s^{-k} integrand term when
// the path is the lower imaginary axis
long long axis_weight(int k, std::pair<long long, long long> c) {
    int m = ((k - 1) % 4 + 4) % 4;  // i^{k-1}
    switch (m) {
        case 0: return c.first;    // 1
        case 1: return -c.second;  // i
        case 2: return -c.first;   // -1
        default: return c.second;  // -i
    }
}

Interval mstar_of(const Interval& rho) {
    return Interval(1.0) + Interval(4.0) / rho + Interval(20.0) / sq(rho) +
           Interval(120.0) / pow_int(rho, 3);
}

void require_refinable(const ProblemSpec& p, const ConstantTable& t) {
    if (!p.refinement) throw NotApplicable("problem carries no refinement data");
    if (!(p.ledger.h0.lo() == 0.0 && p.ledger.h0.hi() == 0.0))
        throw NotApplicable("refined enclosure requires h0 = 0");
    for (int i = 0; i < 3; ++i)
        if (t.m11[static_cast<std::size_t>(i)].mag() != 0.0)
            throw NotApplicable("refined enclosure requires vanishing low-order derivative bounds");
    for (int i = 0; i < 2; ++i)
        if (t.m12[static_cast<std::size_t>(i)].mag() != 0.0)
            throw NotApplicable("refined enclosure requires vanishing low-order derivative bounds");
}

}  // namespace

ComplexInterval kappa0(const ProblemSpec& p, const Interval& rho,
                       const ComplexInterval& delta_phi) {
    if (!(rho.lo() > 0.0)) throw DomainError("kappa0 requires rho > 0");
    const Interval& alpha = p.ledger.alpha;
    const Interval& h0 = p.ledger.h0;
    ComplexInterval expo;
    if (h0.lo() == 0.0 && h0.hi() == 0.0) {
        expo = ComplexInterval(alpha * rho, Interval(0.0));
    } else {
        Interval re = alpha * (rho - h0 * pi_interval() * Interval(0.5));
        Interval im = -alpha * h0 * log(rho);
        expo = ComplexInterval(re, im);
    }
    ComplexInterval w = complex_exp(expo) * delta_phi;
    // multiply by i, divide by the real rho
    return {-w.im / rho, w.re / rho};
}

ComplexInterval theta_basic(const ComplexInterval& k0, const Interval& mbar) {
    if (!(mbar.hi() < 1.0))
        throw ThresholdError("theta_basic requires Mbar < 1");
    double infl = rnd::mul_up(mbar.hi(), abs_upper(k0));
    return {widen(k0.re, infl), widen(k0.im, infl)};
}

RefinementSeries refinement_series(const RefinementData& data) {
    ExactSeries phis = from_coeffs(data.phi_star, 3);
    ExactSeries vphis = from_coeffs(data.varphi_star, 3);
    RefinementSeries r;
    r.product = mul(phis, vphis);
    // 2 phi* varphi* s^2 (i - 1/s) + varphi*/s
    ExactSeries p2 = scale(r.product, 2, 0);
    ExactSeries term = add(shift(scale(p2, 0, 1), -2), shift(scale(p2, -1, 0), -1));
    r.integrand = add(term, shift(vphis, 1));
    return r;
}

RefinementBreakdown refinement_breakdown(const ProblemSpec& p, const ConstantTable& t,
                                         const Interval& rho, const ComplexInterval& k0) {
    require_refinable(p, t);
    const RefinementData& data = *p.refinement;
    RefinementSeries rs = refinement_series(data);

    // the stored beta coefficients must match the exact integrand
    for (int k = 4; k <= 7; ++k) {
        auto c = rs.integrand.at(k);
        long long expected = data.beta[static_cast<std::size_t>(k - 4)];
        long long re = c.first, im = c.second;
        bool ok = (k % 2 == 0) ? (re == 0 && im == expected) : (im == 0 && re == expected);
        if (!ok) throw Error("refinement series coefficients disagree with stored beta");
    }

    RefinementBreakdown out;
    out.mstar = mstar_of(rho);
    if (!(out.mstar.hi() <= t.m0.lo()))
        throw ThresholdError("M*(rho) <= M0(rho) fails at this rho");

    // series factor: 1 + sum over kept powers of Re(i^{k-1} c_k)/((k-1) rho^{k-1})
    Interval corr(0.0);
    for (int k = 4; k <= 7; ++k) {
        long long w = axis_weight(k, rs.integrand.at(k));
        corr += Interval(static_cast<double>(w)) /
                (Interval(static_cast<double>(k - 1)) * pow_int(rho, k - 1));
    }
    out.series_factor = Interval(1.0) + corr;

    // exact-tail integral bound: sum_{k>=8} |c_k| / ((k-1) rho^{k-1})
    Interval tail(0.0);
    int top = rs.integrand.lowest_power + static_cast<int>(rs.integrand.coeff.size());
    for (int k = 8; k < top; ++k) {
        auto [re, im] = rs.integrand.at(k);
        if (re == 0 && im == 0) continue;
        Interval cmag = sqrt(Interval(static_cast<double>(re * re + im * im)));
        tail += cmag / (Interval(static_cast<double>(k - 1)) * pow_int(rho, k - 1));
    }

    // psi+- deviation from the 4-term series: B/|s|^6
    Interval b8 = b_constant(8);
    Interval B = b8 * (t.m11[3] + t.m12[2]) * t.m0 + Interval(840.0) * b8;
    Interval x = sq(t.m0) / pow_int(rho, 4);
    Interval R = (Interval(1.0) + Interval(4.0) * t.m0 * (Interval(1.0) + Interval(1.0) / rho) +
                  Interval(3.0) * x) /
                 pow_int(Interval(1.0) - x, 3);

    Interval ms = out.mstar;
    Interval xs = sq(ms) / pow_int(rho, 4);
    Interval dens = sq(Interval(1.0) - xs);
    Interval grow = Interval(2.0) * ms * (Interval(1.0) + Interval(1.0) / rho) + Interval(1.0);
    Interval B11 = pow_int(ms, 4) * (Interval(1.0) + Interval(1.0) / rho) / dens;
    Interval B12 = pow_int(ms, 5) * grow * (Interval(3.0) + Interval(2.0) * xs) /
                   (pow_int(rho, 4) * dens);
    Interval B13 = Interval(2.0) * pow_int(ms, 3) * grow;

    Interval k0abs(abs_upper(k0));
    out.es_bound = k0abs * (B * R / (Interval(6.0) * pow_int(rho, 6)) +
                            (B11 + B12 + B13) / (Interval(7.0) * pow_int(rho, 7)) + tail);
    out.etheta_bound = t.a1 * t.a * k0abs / (Interval(1.0) - t.a);
    return out;
}

ComplexInterval theta_refined(const ProblemSpec& p, const ConstantTable& t,
                              const Interval& rho, const ComplexInterval& k0) {
    RefinementBreakdown b = refinement_breakdown(p, t, rho, k0);
    ComplexInterval theta = b.series_factor * k0;
    double infl = rnd::add_up(b.es_bound.hi(), b.etheta_bound.hi());
    return {widen(theta.re, infl), widen(theta.im, infl)};
}

}  // namespace stokes
