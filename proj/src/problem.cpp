#include "stokes/problem.hpp"

#include <mutex>

#include "stokes/taylor.hpp"

namespace stokes {

namespace {

// recorder scalar: running eval_field6 over this type builds the DAG
struct Rec {
    int idx;
    Rec() : idx(-1) {}
    Rec(double c);
};

FieldDag* g_dag = nullptr;

int push(TOp op, int a, int b, double c = 0.0) {
    g_dag->nodes.push_back({op, a, b, c});
    return static_cast<int>(g_dag->nodes.size()) - 1;
}

Rec::Rec(double c) { idx = push(TOp::Const, -1, -1, c); }

bool is_const(int i, double& out) {
    const TapeNode& n = g_dag->nodes[i];
    if (n.op == TOp::Const) {
        out = n.c;
        return true;
    }
    return false;
}

Rec operator+(Rec a, Rec b) {
    Rec r;
    r.idx = push(TOp::Add, a.idx, b.idx);
    return r;
}
Rec operator-(Rec a, Rec b) {
    Rec r;
    r.idx = push(TOp::Sub, a.idx, b.idx);
    return r;
}
Rec operator-(Rec a) {
    Rec r;
    r.idx = push(TOp::Neg, a.idx, -1);
    return r;
}
Rec operator*(Rec a, Rec b) {
    Rec r;
    double c;
    if (is_const(a.idx, c))
        r.idx = push(TOp::MulC, b.idx, -1, c);
    else if (is_const(b.idx, c))
        r.idx = push(TOp::MulC, a.idx, -1, c);
    else
        r.idx = push(TOp::Mul, a.idx, b.idx);
    return r;
}
Rec operator/(Rec a, Rec b) {
    Rec r;
    r.idx = push(TOp::Div, a.idx, b.idx);
    return r;
}

FieldDag build_dag(FieldKind kind) {
    FieldDag dag;
    g_dag = &dag;
    Rec st[6], out[6];
    for (int i = 0; i < 6; ++i) {
        st[i].idx = push(TOp::Var, -1, -1);
        dag.var[i] = st[i].idx;
    }
    eval_field6<Rec>(kind, st, out);
    for (int i = 0; i < 6; ++i) dag.out[i] = out[i].idx;
    g_dag = nullptr;
    return dag;
}

}  // namespace

const FieldDag& FieldDag::get(FieldKind kind) {
    static std::mutex m;
    static FieldDag dags[2];
    static bool built[2] = {false, false};
    int i = (kind == FieldKind::Example1) ? 0 : 1;
    std::lock_guard<std::mutex> lock(m);
    if (!built[i]) {
        dags[i] = build_dag(kind);
        built[i] = true;
    }
    return dags[i];
}

IntervalVector ProblemSpec::eval_field(const StateBox& box) const {
    if (!(box.s_norm2_lower() > 0.0))
        throw DomainError("state box touches s = 0");
    std::array<Interval, 6> st = box.components();
    std::array<Interval, 6> out;
    eval_field6<Interval>(field_kind, st.data(), out.data());
    IntervalVector v(6);
    for (int i = 0; i < 6; ++i) v[i] = out[i];
    return v;
}

ProblemSpec example1() {
    ProblemSpec p;
    p.name = "example1";
    p.field_kind = FieldKind::Example1;
    p.ledger = LedgerInputs{};  // alpha = b = a3 = 1, everything else 0
    p.ledger.cF = Interval(1.0);  // |F| = |z|^3 exactly
    RefinementData r;
    r.beta = {3, -6, -68, 168};
    r.phi_star = {{{0, -1}, {-4, 0}, {0, 20}, {120, 0}}};
    r.varphi_star = {{{0, 1}, {-4, 0}, {0, -20}, {120, 0}}};
    p.refinement = r;
    return p;
}

ProblemSpec example2() {
    ProblemSpec p;
    p.name = "example2";
    p.field_kind = FieldKind::Example2;
    p.ledger = LedgerInputs{};
    p.ledger.cF = Interval(2.0);
    p.ledger.cFphi = Interval(1.0);
    p.ledger.cFvarphi = Interval(1.0);
    MOverride ov;
    ov.zero_m123 = true;
    ov.m4 = [](const Interval& rho, const Interval& m0) {
        Interval one(1.0);
        Interval x = sq(m0) / pow_int(rho, 4);
        Interval den = sq(one - x);
        Interval base = m0 / den;
        Interval grow = m0 * (one + one / rho);
        Interval m11 = base * (Interval(3.0) + grow * (Interval(2.0) - x));
        Interval m12 = base * (Interval(3.0) + grow);
        return std::make_pair(m11, m12);
    };
    ov.justification =
        "derivative suprema of the example-2 nonlinearity computed directly; "
        "sharper than the generic ledger route and zero for orders 1-3";
    p.m4_override = ov;
    return p;
}

ProblemSpec problem_by_name(const std::string& name) {
    if (name == "example1") return example1();
    if (name == "example2") return example2();
    throw DomainError("unknown problem: " + name);
}

}  // namespace stokes
