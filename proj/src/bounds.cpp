#include "stokes/bounds.hpp"

namespace stokes {

namespace {

// exact integer double factorial, n <= 33 keeps it inside int64
long long dfact(int n) {
    if (n <= 0) return 1;  // (-1)!! = 0!! = 1
    long long r = 1;
    for (int k = n; k > 0; k -= 2) r *= k;
    return r;
}

Interval abs_a3(const ProblemSpec& p) {
    return Interval(abs_lower(p.ledger.a3), abs_upper(p.ledger.a3));
}

Interval denom_one_minus(const ProblemSpec& p, const Interval& rho, const Interval& m0) {
    const auto& lg = p.ledger;
    return Interval(1.0) - lg.b * sq(m0) / pow_int(rho, 4) - lg.cH / rho;
}

}  // namespace

Interval b_constant(int m) {
    if (m < 3) throw DomainError("b_constant requires m >= 3");
    if (m > 33) throw DomainError("b_constant: double factorial overflow");
    Interval ratio = Interval(static_cast<double>(dfact(m - 3))) /
                     Interval(static_cast<double>(dfact(m - 2)));
    if (m % 2 == 0) return pi_interval() * Interval(0.5) * ratio;
    return ratio;
}

Interval c_constant(int nu, const Interval& alpha) {
    if (nu < 4) throw DomainError("c_constant requires nu >= 4");
    Interval num = sqrt(pow_int(Interval(static_cast<double>(nu + 2)), nu + 2));
    Interval den = sqrt(pow_int(Interval(static_cast<double>(nu + 1)), nu + 1));
    return num / (alpha * den);
}

bool gate_rho1(const ProblemSpec& p, const Interval& rho) {
    double floor = std::max(2.0, p.ledger.cH0bar.hi());
    return rho.lo() > floor;
}

Interval c0_bound(const ProblemSpec& p, const Interval& rho) {
    if (!gate_rho1(p, rho))
        throw ThresholdError("c0_bound: rho must exceed max(2, CbarH0)");
    const auto& lg = p.ledger;
    return (lg.cF0 + abs_a3(p) * lg.cH0bar) / (Interval(1.0) - lg.cH0bar / rho);
}

Interval m0_bound(const ProblemSpec& p, const Interval& rho) {
    Interval c0 = c0_bound(p, rho);
    return Interval(22.0) * abs_a3(p) / (Interval(3.0) * p.ledger.alpha) +
           Interval(2.0) * b_constant(5) * c0;
}

bool gate_min_m0(const ProblemSpec& p, const Interval& rho) {
    if (!gate_rho1(p, rho)) return false;
    Interval m0 = m0_bound(p, rho);
    Interval g1 = denom_one_minus(p, rho, m0);
    Interval g2 = Interval(1.0) - m0 / sq(rho);
    return g1.lo() > 0.0 && g2.lo() > 0.0;
}

MMatrix m_matrix(const ProblemSpec& p, const Interval& rho) {
    if (!gate_min_m0(p, rho))
        throw ThresholdError("m_matrix: condition 1 - b M0^2/rho^4 - C_H/rho > 0 fails");
    const auto& lg = p.ledger;
    Interval m0 = m0_bound(p, rho);
    Interval a3m = abs_a3(p);
    Interval h0m = abs(lg.h0);
    Interval den1 = denom_one_minus(p, rho, m0);
    Interval den2 = sq(den1);

    MMatrix m;
    m.m11[0] = lg.alpha * h0m / den1;
    m.m11[1] = (h0m + lg.alpha * lg.cH0 + lg.cFphi) / den1;
    m.m11[2] = (m0 * lg.alpha * lg.cHphi + lg.cF * lg.cHphi +
                (lg.alpha * lg.cHbar() * m0 + lg.cH0) * den1) / den2;
    m.m11[3] = m0 / den2 *
               (lg.b * (lg.cF + lg.alpha * m0) + lg.cHphi +
                (lg.alpha * lg.b * m0 + lg.cHbar() + lg.b * m0 / rho) * den1 +
                lg.b * m0 / rho);
    m.m12[0] = lg.cFvarphi / den1;
    m.m12[1] = (m0 * lg.alpha * lg.cHvarphi + lg.cF * lg.cHvarphi) / den2;
    m.m12[2] = m0 / den2 * (lg.b * (lg.cF + lg.alpha * m0) + lg.cHvarphi + lg.b * m0 / rho);
    (void)a3m;

    if (p.m4_override) {
        auto [m114, m124] = p.m4_override->m4(rho, m0);
        m.m11[3] = m114;
        m.m12[2] = m124;
        if (p.m4_override->zero_m123) {
            m.m11[0] = m.m11[1] = m.m11[2] = Interval(0.0);
            m.m12[0] = m.m12[1] = Interval(0.0);
        }
    }
    return m;
}

LipschitzBounds lipschitz(const ProblemSpec& p, const Interval& rho) {
    MMatrix m = m_matrix(p, rho);
    const Interval& alpha = p.ledger.alpha;
    Interval s2 = m.m11[1] + m.m12[0];
    Interval s3 = m.m11[2] + m.m12[1];
    Interval s4 = m.m11[3] + m.m12[2];
    LipschitzBounds lb;
    lb.l1 = c_constant(4, alpha) * m.m11[0] / rho + b_constant(6) * s2 / rho +
            b_constant(7) * s3 / sq(rho) + b_constant(8) * s4 / pow_int(rho, 3);
    lb.l2 = c_constant(4, alpha) * m.m11[0] / rho + c_constant(5, alpha) * s2 / sq(rho) +
            c_constant(6, alpha) * s3 / pow_int(rho, 3) +
            c_constant(7, alpha) * s4 / pow_int(rho, 4);
    lb.l = min(lb.l1, lb.l2);
    return lb;
}

ContractionBounds contraction_a(const ProblemSpec& p, const Interval& rho) {
    MMatrix m = m_matrix(p, rho);
    const Interval& alpha = p.ledger.alpha;
    ContractionBounds cb;
    cb.a1 = m.m11[1] / rho + (m.m11[2] + m.m12[0]) / (Interval(2.0) * sq(rho)) +
            (m.m11[3] + m.m12[1]) / (Interval(3.0) * pow_int(rho, 3)) +
            m.m12[2] / (Interval(4.0) * pow_int(rho, 4));
    cb.a2 = m.m12[0] / (Interval(2.0) * alpha * sq(rho)) +
            (m.m11[1] + m.m12[1]) / (Interval(2.0) * alpha * pow_int(rho, 3)) +
            (m.m11[2] + m.m12[2]) / (Interval(2.0) * alpha * pow_int(rho, 4)) +
            m.m11[3] / (Interval(2.0) * alpha * pow_int(rho, 5));
    cb.a = max(cb.a1, cb.a2);
    return cb;
}

Interval relative_error(const Interval& a1, const Interval& a) {
    if (!(a.hi() < 1.0))
        throw ThresholdError("relative_error: A must be strictly below 1");
    return a1 / (Interval(1.0) - a);
}

ConstantTable constant_table(const ProblemSpec& p, const Interval& rho) {
    ConstantTable t;
    t.rho = rho;
    t.c0 = c0_bound(p, rho);
    t.m0 = m0_bound(p, rho);
    MMatrix m = m_matrix(p, rho);
    t.m11 = m.m11;
    t.m12 = m.m12;
    LipschitzBounds lb = lipschitz(p, rho);
    t.l1 = lb.l1;
    t.l2 = lb.l2;
    t.l = lb.l;
    ContractionBounds cb = contraction_a(p, rho);
    t.a1 = cb.a1;
    t.a2 = cb.a2;
    t.a = cb.a;
    if (t.a.hi() < 1.0) t.mbar = relative_error(t.a1, t.a);
    return t;
}

bool gate_lipschitz(const ConstantTable& t) { return t.l.hi() <= 0.5; }
bool gate_contraction(const ConstantTable& t) { return t.a.hi() < 0.5; }

}  // namespace stokes
