#pragma once

#include <functional>
#include <optional>
#include <string>

#include "stokes/complex_interval.hpp"
#include "stokes/interval_vector.hpp"

namespace stokes {

// author-asserted analyticity constants of one inner-equation instance
struct LedgerInputs {
    Interval alpha{1.0};
    Interval b{1.0};
    ComplexInterval a3{1.0, 0.0};
    Interval h0{0.0};
    Interval cF0{0.0};     // |F(0,0,z) - a3 z^3|   <= cF0 |z|^4
    Interval cH0{0.0};     // |H(0,0,z) - h0 z^3|   <= cH0 |z|^4
    Interval cH0bar{0.0};  // |H(0,0,z)|            <= cH0bar |z|^3
    Interval cF{0.0};      // |F(x,y,z)|            <= cF |z|^3
    Interval cFphi{0.0};   // |dF/dx|               <= cFphi |z|^2
    Interval cFvarphi{0.0};
    Interval cH{0.0};
    Interval cHphi{0.0};
    Interval cHvarphi{0.0};

    Interval cHbar() const { return cHphi + cHvarphi; }
    Interval cFbar() const { return cFphi + cFvarphi; }
};

// replacement derivative bounds for problems where the generic formulas are
// not sharp; values must be validated upper bounds for the corresponding
// derivative suprema of the actual nonlinearity
struct MOverride {
    bool zero_m123 = true;
    std::function<std::pair<Interval, Interval>(const Interval& rho, const Interval& m0)> m4;
    std::string justification;
};

struct RefinementData {
    std::array<long, 4> beta;                       // series coefficients (i b1/s^4 + b2/s^5 + ...)
    std::array<std::pair<long, long>, 4> phi_star;  // (re, im) of s^-3 .. s^-6 coefficients
    std::array<std::pair<long, long>, 4> varphi_star;
};

enum class FieldKind { Example1, Example2 };

// the six-dimensional real-time vector fields of the two built-in problems,
// generic over the coefficient algebra (interval, double, jets, duals)
template <typename S>
void eval_field6(FieldKind kind, const S state[6], S out[6]);

class ProblemSpec {
  public:
    std::string name;
    LedgerInputs ledger;
    FieldKind field_kind;
    std::optional<MOverride> m4_override;
    std::optional<RefinementData> refinement;

    static constexpr int taylor_order_support = 40;

    // containment-sound derivative enclosure; the box must stay away from s=0
    IntervalVector eval_field(const StateBox& box) const;
};

ProblemSpec example1();
ProblemSpec example2();
ProblemSpec problem_by_name(const std::string& name);

// ---- field formulas -------------------------------------------------------

template <typename S>
void eval_field6(FieldKind kind, const S st[6], S out[6]) {
    const S& x1 = st[0];
    const S& y1 = st[1];
    const S& x2 = st[2];
    const S& y2 = st[3];
    const S& s1 = st[4];
    const S& s2 = st[5];

    S s1sq = s1 * s1;
    S s2sq = s2 * s2;
    S d = s1sq + s2sq;           // |s|^2
    S u = S(1.0) / d;
    S u3 = u * u * u;
    S fre = (s1 * (s1sq - S(3.0) * s2sq)) * u3;  // Re s^3 / |s|^6
    S fim = (s2 * (s2sq - S(3.0) * s1sq)) * u3;  // Im s^3 / |s|^6
    S a = s2 * u;
    S c = s1 * u;

    S P = x1 * x2 - y1 * y2;
    S Q = x1 * y2 + x2 * y1;
    S sd = s1sq - s2sq;
    S cr = s1 * s2;

    if (kind == FieldKind::Example1) {
        out[0] = (S(1.0) + a) * y1 + c * x1 - fre;
        out[1] = -(S(1.0) + a) * x1 + c * y1 - fim;
        out[2] = -(S(1.0) - a) * y2 + c * x2 - fre;
        out[3] = (S(1.0) - a) * x2 + c * y2 - fim;
        out[4] = S(1.0) + sd * P - S(2.0) * cr * Q;
        out[5] = S(2.0) * cr * P + sd * Q;
        return;
    }

    S g1 = (s2 * (x1 * x1 - y1 * y1 - x2 * x2 + y2 * y2) +
            S(2.0) * s1 * (x2 * y2 - x1 * y1)) * u;
    S g2 = (s1 * (x1 * x1 - x2 * x2 - y1 * y1 + y2 * y2) +
            S(2.0) * s2 * (x1 * y1 - x2 * y2)) * u;
    out[0] = c * x1 + (S(1.0) + a) * y1 - fre + g1;
    out[1] = -(S(1.0) + a) * x1 + c * y1 - fim + g2;
    out[2] = c * x2 - (S(1.0) - a) * y2 - fre + g1;
    out[3] = (S(1.0) - a) * x2 + c * y2 - fim + g2;
    out[4] = S(1.0) + sd * P - S(2.0) * cr * Q;
    out[5] = S(2.0) * cr * P + sd * Q;
}

}  // namespace stokes
