#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "stokes/problem.hpp"

namespace stokes {

// ---- forward-mode dual over intervals (value + d/d(initial condition)) ----

struct IDual {
    Interval v;
    std::array<Interval, 6> d{};

    IDual() = default;
    IDual(double x) : v(x) {}
    IDual(const Interval& x) : v(x) {}

    friend IDual operator+(const IDual& a, const IDual& b) {
        IDual r;
        r.v = a.v + b.v;
        for (int i = 0; i < 6; ++i) r.d[i] = a.d[i] + b.d[i];
        return r;
    }
    friend IDual operator-(const IDual& a, const IDual& b) {
        IDual r;
        r.v = a.v - b.v;
        for (int i = 0; i < 6; ++i) r.d[i] = a.d[i] - b.d[i];
        return r;
    }
    IDual operator-() const {
        IDual r;
        r.v = -v;
        for (int i = 0; i < 6; ++i) r.d[i] = -d[i];
        return r;
    }
    friend IDual operator*(const IDual& a, const IDual& b) {
        IDual r;
        r.v = a.v * b.v;
        for (int i = 0; i < 6; ++i) r.d[i] = a.v * b.d[i] + b.v * a.d[i];
        return r;
    }
    friend IDual operator/(const IDual& a, const IDual& b) {
        IDual r;
        r.v = a.v / b.v;
        for (int i = 0; i < 6; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) / b.v;
        return r;
    }
    IDual& operator+=(const IDual& o) { return *this = *this + o; }
};

inline IDual scale(const IDual& a, double c) {
    IDual r;
    r.v = a.v * Interval(c);
    for (int i = 0; i < 6; ++i) r.d[i] = a.d[i] * Interval(c);
    return r;
}
inline Interval scale(const Interval& a, double c) { return a * Interval(c); }
inline double scale(double a, double c) { return a * c; }

// ---- expression tape recorded from eval_field6 -----------------------------

enum class TOp : unsigned char { Var, Const, Add, Sub, Neg, Mul, Div, MulC };

struct TapeNode {
    TOp op;
    int a = -1, b = -1;
    double c = 0.0;
};

struct FieldDag {
    std::vector<TapeNode> nodes;
    std::array<int, 6> var;  // node indices of the state variables
    std::array<int, 6> out;  // node indices of the derivatives

    static const FieldDag& get(FieldKind kind);
};

// Per-order Taylor evaluation of the recorded DAG over coefficient type S.
// Storage is row-major: coefficient k of node n at cf[n * stride + k].
template <typename S>
class FieldTape {
  public:
    FieldTape(FieldKind kind, int max_order)
        : dag_(&FieldDag::get(kind)), stride_(max_order + 1),
          cf_(dag_->nodes.size() * stride_) {}

    int max_order() const { return stride_ - 1; }

    void set_state(int k, const std::array<S, 6>& v) {
        for (int i = 0; i < 6; ++i) cf_[dag_->var[i] * stride_ + k] = v[i];
    }
    const S& state_coeff(int i, int k) const { return cf_[dag_->var[i] * stride_ + k]; }
    const S& out_coeff(int i, int k) const { return cf_[dag_->out[i] * stride_ + k]; }

    // compute coefficient k of every node (state coefficients 0..k must be set)
    void advance(int k) {
        const auto& nodes = dag_->nodes;
        for (std::size_t n = 0; n < nodes.size(); ++n) {
            const TapeNode& t = nodes[n];
            S* row = &cf_[n * stride_];
            switch (t.op) {
                case TOp::Var:
                    break;
                case TOp::Const:
                    row[k] = (k == 0) ? S(t.c) : S(0.0);
                    break;
                case TOp::Add:
                    row[k] = cf_[t.a * stride_ + k] + cf_[t.b * stride_ + k];
                    break;
                case TOp::Sub:
                    row[k] = cf_[t.a * stride_ + k] - cf_[t.b * stride_ + k];
                    break;
                case TOp::Neg:
                    row[k] = -cf_[t.a * stride_ + k];
                    break;
                case TOp::MulC:
                    row[k] = scale(cf_[t.a * stride_ + k], t.c);
                    break;
                case TOp::Mul: {
                    const S* ra = &cf_[t.a * stride_];
                    const S* rb = &cf_[t.b * stride_];
                    S acc = ra[0] * rb[k];
                    for (int j = 1; j <= k; ++j) acc += ra[j] * rb[k - j];
                    row[k] = acc;
                    break;
                }
                case TOp::Div: {
                    const S* ra = &cf_[t.a * stride_];
                    const S* rb = &cf_[t.b * stride_];
                    S acc = ra[k];
                    for (int j = 0; j < k; ++j) acc = acc - row[j] * rb[k - j];
                    row[k] = acc / rb[0];
                    break;
                }
            }
        }
    }

  private:
    const FieldDag* dag_;
    int stride_;
    std::vector<S> cf_;
};

// Taylor coefficients of the solution through the given initial values:
// jets[i][k] with jets[i][0] = seed, (k+1) jets[i][k+1] = F(jet)_k.
template <typename S>
void flow_jets(FieldTape<S>& tape, const std::array<S, 6>& seed, int order,
               std::array<std::vector<S>, 6>& jets) {
    for (int i = 0; i < 6; ++i) {
        jets[i].assign(order + 1, S(0.0));
        jets[i][0] = seed[i];
    }
    std::array<S, 6> row;
    for (int k = 0; k <= order; ++k) {
        for (int i = 0; i < 6; ++i) row[i] = jets[i][k];
        tape.set_state(k, row);
        if (k == order) break;
        tape.advance(k);
        for (int i = 0; i < 6; ++i)
            jets[i][k + 1] = scale(tape.out_coeff(i, k), 1.0 / (k + 1));
    }
}

}  // namespace stokes
