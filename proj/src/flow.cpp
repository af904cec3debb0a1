#include "stokes/flow.hpp"

#include <eigen3/Eigen/Dense>
#include <eigen3/Eigen/QR>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "stokes/taylor.hpp"

namespace stokes {

namespace {

using Mat6 = Eigen::Matrix<double, 6, 6>;
using IMat6 = std::array<std::array<Interval, 6>, 6>;
using IVec6 = std::array<Interval, 6>;

IVec6 imatvec(const IMat6& m, const IVec6& v) {
    IVec6 r;
    for (int i = 0; i < 6; ++i) {
        Interval acc(0.0);
        for (int j = 0; j < 6; ++j) acc += m[i][j] * v[j];
        r[i] = acc;
    }
    return r;
}

IMat6 imatmul(const IMat6& a, const IMat6& b) {
    IMat6 r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Interval acc(0.0);
            for (int k = 0; k < 6; ++k) acc += a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

IMat6 from_double(const Mat6& m) {
    IMat6 r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r[i][j] = Interval(m(i, j));
    return r;
}

// enclosure of Q^{-1} * M for a numerically orthogonal double matrix Q:
// Q^{-1} = (I - R)^{-1} Q^T with R = I - Q^T Q, |(I-R)^{-1} - I| <= u/(1-u)
IMat6 solve_orthogonal(const Mat6& Q, const IMat6& M) {
    IMat6 qt;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) qt[i][j] = Interval(Q(j, i));
    IMat6 W = imatmul(qt, M);
    // R = I - Q^T Q in interval arithmetic
    IMat6 qi = from_double(Q);
    IMat6 qtq = imatmul(qt, qi);
    double u = 0.0;
    for (int i = 0; i < 6; ++i) {
        double row = 0.0;
        for (int j = 0; j < 6; ++j) {
            Interval e = (i == j ? Interval(1.0) : Interval(0.0)) - qtq[i][j];
            row = rnd::add_up(row, e.mag());
        }
        u = std::max(u, row);
    }
    if (u >= 0.5) throw WrappingFailure("frame matrix is far from orthogonal");
    double amp = rnd::div_up(u, 1.0 - u);
    for (int j = 0; j < 6; ++j) {
        double colmax = 0.0;
        for (int k = 0; k < 6; ++k) colmax = std::max(colmax, W[k][j].mag());
        double slack = rnd::mul_up(amp, colmax);
        for (int i = 0; i < 6; ++i) W[i][j] = widen(W[i][j], slack);
    }
    return W;
}

IVec6 solve_orthogonal_vec(const Mat6& Q, const IVec6& v) {
    IMat6 m{};
    for (int i = 0; i < 6; ++i) m[i][0] = v[i];
    for (int i = 0; i < 6; ++i)
        for (int j = 1; j < 6; ++j) m[i][j] = Interval(0.0);
    IMat6 w = solve_orthogonal(Q, m);
    IVec6 r;
    for (int i = 0; i < 6; ++i) r[i] = w[i][0];
    return r;
}

struct LohnerSet {
    std::array<double, 6> mid{};
    Mat6 C = Mat6::Identity();
    IVec6 r{};
    Interval time{0.0};

    StateBox hull() const {
        IVec6 h;
        for (int i = 0; i < 6; ++i) {
            Interval acc(mid[i]);
            for (int j = 0; j < 6; ++j) acc += Interval(C(i, j)) * r[j];
            h[i] = acc;
        }
        return StateBox::from(h);
    }
};

LohnerSet make_set(const StateBox& box) {
    LohnerSet s;
    auto c = box.components();
    for (int i = 0; i < 6; ++i) {
        s.mid[i] = c[i].mid();
        s.r[i] = c[i] - Interval(s.mid[i]);
    }
    return s;
}

IVec6 field_of(FieldKind kind, const IVec6& st) {
    IVec6 out;
    eval_field6<Interval>(kind, st.data(), out.data());
    return out;
}

void check_domain(const StateBox& b) {
    if (!(b.s_norm2_lower() > 0.0)) throw DomainError("enclosure reached s = 0");
}

IVec6 to_vec(const StateBox& b) { return b.components(); }

bool subset(const IVec6& a, const IVec6& b) {
    for (int i = 0; i < 6; ++i)
        if (!b[i].contains(a[i])) return false;
    return true;
}

// max row sum of |Df| over the box (Lipschitz estimate for Picard)
double lipschitz_estimate(FieldKind kind, const IVec6& y);

// first-order Picard rough enclosure of the flow over the step time range;
// the initial guess is inflated by the geometric factor 1/(1 - h L)
std::optional<IVec6> rough_enclosure(FieldKind kind, const IVec6& y, double h, double lip) {
    Interval T = h >= 0 ? Interval(0.0, h) : Interval(h, 0.0);
    double hl = std::fabs(h) * lip;
    if (hl >= 0.9) return std::nullopt;
    double blow = 1.2 / (1.0 - hl);
    IVec6 guess = y;
    {
        IVec6 f = field_of(kind, y);
        for (int i = 0; i < 6; ++i)
            guess[i] = widen(y[i] + T * f[i] * Interval(-blow, blow), 1e-18);
    }
    for (int it = 0; it < 16; ++it) {
        if (!(StateBox::from(guess).s_norm2_lower() > 0.0)) return std::nullopt;
        IVec6 f = field_of(kind, guess);
        IVec6 next;
        for (int i = 0; i < 6; ++i) next[i] = y[i] + T * f[i];
        if (subset(next, guess)) return next;
        for (int i = 0; i < 6; ++i)
            guess[i] = widen(hull(next[i], guess[i]), 1e-18 + 1e-3 * guess[i].width());
    }
    return std::nullopt;
}

// rough enclosure of the variational matrix over the step (V(0) = I)
std::optional<IMat6> rough_variational(const IMat6& df, double h) {
    Interval T = h >= 0 ? Interval(0.0, h) : Interval(h, 0.0);
    IMat6 guess{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) guess[i][j] = widen(Interval(i == j ? 1.0 : 0.0), 0.1);
    for (int it = 0; it < 12; ++it) {
        IMat6 prod = imatmul(df, guess);
        IMat6 next{};
        bool ok = true;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                next[i][j] = Interval(i == j ? 1.0 : 0.0) + T * prod[i][j];
                if (!guess[i][j].contains(next[i][j])) ok = false;
            }
        if (ok) return next;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                guess[i][j] = widen(hull(next[i][j], guess[i][j]),
                                    1e-15 + 0.3 * guess[i][j].width());
    }
    return std::nullopt;
}

IMat6 jacobian_at(FieldKind kind, const IVec6& y) {
    std::array<IDual, 6> st, out;
    for (int i = 0; i < 6; ++i) {
        st[i] = IDual(y[i]);
        st[i].d[i] = Interval(1.0);
    }
    eval_field6<IDual>(kind, st.data(), out.data());
    IMat6 df;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) df[i][j] = out[i].d[j];
    return df;
}

double lipschitz_estimate(FieldKind kind, const IVec6& y) {
    IMat6 df = jacobian_at(kind, y);
    double l = 0.0;
    for (int i = 0; i < 6; ++i) {
        double row = 0.0;
        for (int j = 0; j < 6; ++j) row += df[i][j].mag();
        l = std::max(l, row);
    }
    return l;
}

struct Stepper {
    const ProblemSpec& p;
    const IntegratorOptions& opt;
    double sign;  // +1 forward, -1 backward
    FieldTape<Interval> tape_c;
    FieldTape<IDual> tape_d;
    std::FILE* trace = nullptr;

    Stepper(const ProblemSpec& pp, const IntegratorOptions& o, double sgn)
        : p(pp), opt(o), sign(sgn),
          tape_c(pp.field_kind, o.order + 1), tape_d(pp.field_kind, o.order + 1) {
        if (!opt.trace_path.empty()) trace = std::fopen(opt.trace_path.c_str(), "a");
    }
    ~Stepper() {
        if (trace) std::fclose(trace);
    }

    // polynomial coefficients of the centre trajectory
    std::array<std::vector<Interval>, 6> centre_jets(const LohnerSet& set, int order) {
        std::array<Interval, 6> seed;
        for (int i = 0; i < 6; ++i) seed[i] = Interval(set.mid[i]);
        std::array<std::vector<Interval>, 6> jets;
        flow_jets(tape_c, seed, order, jets);
        return jets;
    }

    // advance the set by the signed step h (caller guarantees no crossing)
    void step(LohnerSet& set, double h) {
        const int N = opt.order;
        StateBox hb = set.hull();
        check_domain(hb);
        IVec6 y = to_vec(hb);

        double lip = lipschitz_estimate(p.field_kind, y);
        auto Y = rough_enclosure(p.field_kind, y, h, lip);
        if (!Y) throw WrappingFailure("rough enclosure iteration failed");
        check_domain(StateBox::from(*Y));

        IMat6 df = jacobian_at(p.field_kind, *Y);
        auto Vr = rough_variational(df, h);
        if (!Vr) throw WrappingFailure("variational rough enclosure failed");

        // centre polynomial, order N
        auto cj = centre_jets(set, N);

        // dual jets over the rough enclosure, order N+1 (remainders + Jacobian)
        std::array<IDual, 6> dseed;
        for (int i = 0; i < 6; ++i) {
            dseed[i] = IDual((*Y)[i]);
            dseed[i].d[i] = Interval(1.0);
        }
        std::array<std::vector<IDual>, 6> dj;
        flow_jets(tape_d, dseed, N + 1, dj);

        Interval H(h);
        std::array<Interval, 6> powH;  // H^k accumulators reused below
        // flow value: centre polynomial + remainder over [Y]
        IVec6 ynew;
        for (int i = 0; i < 6; ++i) {
            Interval acc = cj[i][N];
            for (int k = N - 1; k >= 0; --k) acc = acc * H + cj[i][k];
            Interval hn1 = pow_int(H, N + 1);
            acc += dj[i][N + 1].v * hn1;
            ynew[i] = acc;
        }
        (void)powH;

        // Jacobian: polynomial part from dual jets, remainder times V_rough
        IMat6 J;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                Interval acc = dj[i][N].d[j];
                for (int k = N - 1; k >= 0; --k) acc = acc * H + dj[i][k].d[j];
                J[i][j] = acc;
            }
        {
            Interval hn1 = pow_int(H, N + 1);
            IMat6 vrem;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) vrem[i][j] = dj[i][N + 1].d[j];
            IMat6 tail = imatmul(vrem, *Vr);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) J[i][j] += tail[i][j] * hn1;
        }

        IMat6 M = imatmul(J, from_double(set.C));

        std::array<double, 6> nmid;
        IVec6 z;
        for (int i = 0; i < 6; ++i) {
            nmid[i] = ynew[i].mid();
            z[i] = ynew[i] - Interval(nmid[i]);
        }

        // QR frame update, columns ordered by contribution
        Mat6 A;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) A(i, j) = M[i][j].mid();
        std::array<int, 6> perm;
        std::iota(perm.begin(), perm.end(), 0);
        std::array<double, 6> weight;
        for (int j = 0; j < 6; ++j) weight[j] = A.col(j).norm() * set.r[j].mag();
        std::sort(perm.begin(), perm.end(), [&](int a, int b) { return weight[a] > weight[b]; });
        Mat6 Ap;
        for (int j = 0; j < 6; ++j) Ap.col(j) = A.col(perm[j]);
        Eigen::HouseholderQR<Mat6> qr(Ap);
        Mat6 Q = qr.householderQ();

        if (std::getenv("STOKES_FLOW_DEBUG")) {
            double jw = 0, mw = 0, zw = 0;
            for (int i = 0; i < 6; ++i) {
                zw = std::max(zw, z[i].width());
                for (int j = 0; j < 6; ++j) {
                    jw = std::max(jw, J[i][j].width());
                    mw = std::max(mw, M[i][j].width());
                }
            }
            std::fprintf(stderr, "  step h=%.3e Jw=%.2e Mw=%.2e zw=%.2e\n", h, jw, mw, zw);
        }
        IMat6 QM = solve_orthogonal(Q, M);
        IVec6 qz = solve_orthogonal_vec(Q, z);
        IVec6 nr = imatvec(QM, set.r);
        for (int i = 0; i < 6; ++i) nr[i] += qz[i];

        LohnerSet cand;
        cand.mid = nmid;
        cand.C = Q;
        cand.r = nr;
        cand.time = set.time + Interval(h);

        StateBox nh = cand.hull();
        double w = 0.0;
        for (const auto& c : nh.components()) w = std::max(w, c.width());
        if (w > opt.width_cap)
            throw WrappingFailure("enclosure width " + std::to_string(w) +
                                  " exceeds cap " + std::to_string(opt.width_cap));
        set = cand;
        if (trace)
            std::fprintf(trace, "t=%.6f h=%.3e s1=[%.9e,%.9e] width=%.3e\n",
                         set.time.mid(), h, nh.s1.lo(), nh.s1.hi(), w);
    }

    double suggest_step(const LohnerSet& set) {
        const int N = opt.order;
        auto cj = centre_jets(set, N);
        double top = 0.0;
        for (int i = 0; i < 6; ++i) top = std::max(top, cj[i][N].mag());
        double h = opt.max_step;
        if (top > 0.0) h = std::min(h, std::pow(opt.tol / top, 1.0 / N));
        double lip = lipschitz_estimate(p.field_kind, to_vec(set.hull()));
        if (lip > 0.0) h = std::min(h, 0.55 / lip);
        return std::max(h, 1e-4);
    }
};

}  // namespace

SectionHit integrate_to_section(const ProblemSpec& p, const StateBox& start,
                                Direction dir, const IntegratorOptions& opt) {
    double sign = (dir == Direction::Forward) ? 1.0 : -1.0;
    if (dir == Direction::Forward && !(start.s1.hi() < 0.0))
        throw PreconditionError("forward transport requires s1 < 0");
    if (dir == Direction::Backward && !(start.s1.lo() > 0.0))
        throw PreconditionError("backward transport requires s1 > 0");

    Stepper st(p, opt, sign);
    LohnerSet set = make_set(start);
    double budget = opt.time_budget_factor * (start.s1.mag() + 100.0);

    while (true) {
        if (std::fabs(set.time.mid()) > budget)
            throw NoCrossing("no section crossing within the time budget");
        StateBox hb = set.hull();
        check_domain(hb);
        // distance to the section along the time direction (s1' ~ sign)
        double dist = (dir == Direction::Forward) ? -hb.s1.hi() : hb.s1.lo();
        if (dist <= 0.0)
            throw PreconditionError("enclosure astride the section before crossing");

        double gap = std::max(4.0 * hb.s1.width(), 1e-7);
        if (dist <= 2.5 * gap) break;  // close enough for the crossing solve

        double h = st.suggest_step(set);
        if (std::getenv("STOKES_FLOW_DEBUG"))
            std::fprintf(stderr, "dbg t=%.3f suggested h=%.4e dist=%.3f r=[%.2e %.2e %.2e %.2e %.2e %.2e]\n",
                         set.time.mid(), h, dist, set.r[0].width(), set.r[1].width(),
                         set.r[2].width(), set.r[3].width(), set.r[4].width(), set.r[5].width());
        if (dist - h < 2.0 * gap) h = dist - 2.0 * gap;  // stop short
        double hs = sign * h;
        for (int attempt = 0;; ++attempt) {
            try {
                st.step(set, hs);
                break;
            } catch (const WrappingFailure&) {
                if (attempt >= 6) throw;
                hs *= 0.5;
            }
        }
    }

    {
        // crossing window: jets seeded at the full hull, remainder over the
        // window enclosure; every trajectory crosses inside [0, hw]
        StateBox cb = set.hull();
        check_domain(cb);
        IVec6 y = to_vec(cb);
        double approach = (dir == Direction::Forward) ? -cb.s1.hi() : cb.s1.lo();
        double hw = sign * (approach + 6.0 * cb.s1.width() + 1e-9) * 1.5;

        const int N = opt.order;
        for (int attempt = 0;; ++attempt) {
            auto Yw = rough_enclosure(p.field_kind, y, hw, lipschitz_estimate(p.field_kind, y));
            if (!Yw) {
                hw *= 0.7;
                if (++attempt > 8) throw WrappingFailure("crossing window enclosure failed");
                continue;
            }
            check_domain(StateBox::from(*Yw));
            // transversality over the window
            IVec6 fw = field_of(p.field_kind, *Yw);
            bool transversal = (dir == Direction::Forward) ? fw[4].lo() > 0.0 : fw[4].hi() < 0.0;
            if (!transversal) throw NoCrossing("s1' not bounded away from zero at the section");

            std::array<Interval, 6> seed;
            for (int i = 0; i < 6; ++i) seed[i] = y[i];
            std::array<std::vector<Interval>, 6> jets;
            flow_jets(st.tape_c, seed, N + 1, jets);
            // absorb the Lagrange remainder into the top coefficient
            std::array<IDual, 6> dseed;
            for (int i = 0; i < 6; ++i) dseed[i] = IDual((*Yw)[i]);
            std::array<std::vector<IDual>, 6> rj;
            flow_jets(st.tape_d, dseed, N + 1, rj);
            for (int i = 0; i < 6; ++i) jets[i][N + 1] = rj[i][N + 1].v;

            auto poly_eval = [&](int comp, const Interval& t) {
                Interval acc = jets[comp][N + 1];
                for (int k = N; k >= 0; --k) acc = acc * t + jets[comp][k];
                return acc;
            };
            auto poly_deriv = [&](int comp, const Interval& t) {
                Interval acc = Interval(static_cast<double>(N + 1)) * jets[comp][N + 1];
                for (int k = N; k >= 1; --k)
                    acc = acc * t + Interval(static_cast<double>(k)) * jets[comp][k];
                return acc;
            };

            Interval window = (hw >= 0) ? Interval(0.0, hw) : Interval(hw, 0.0);
            Interval s1_end = poly_eval(4, Interval(hw));
            bool crossed = (dir == Direction::Forward) ? s1_end.lo() > 0.0 : s1_end.hi() < 0.0;
            if (!crossed) {
                hw *= 1.4;
                if (++attempt > 8) throw NoCrossing("could not bracket the section crossing");
                continue;
            }

            // interval Newton on s1(tau) = 0 within the window
            Interval tau = window;
            Interval dwin = poly_deriv(4, window);
            if (dwin.contains_zero())
                throw NoCrossing("degenerate crossing: s1' enclosure contains zero");
            for (int it = 0; it < 6; ++it) {
                Interval m(tau.mid());
                Interval nw = m - poly_eval(4, m) / dwin;
                if (!nw.intersects(tau)) break;
                Interval next = intersect(nw, tau);
                if (next == tau) break;
                tau = next;
            }

            SectionHit hit;
            IVec6 out;
            for (int i = 0; i < 6; ++i) out[i] = poly_eval(i, tau);
            out[4] = Interval(0.0);
            hit.state = StateBox::from(out);
            hit.time = set.time + tau;
            return hit;
        }
    }
}

SectionHit poincare_minus(const ProblemSpec& p, const StateBox& pm,
                          const IntegratorOptions& opt) {
    return integrate_to_section(p, pm, Direction::Forward, opt);
}

SectionHit poincare_plus(const ProblemSpec& p, const StateBox& pp,
                         const IntegratorOptions& opt) {
    return integrate_to_section(p, pp, Direction::Backward, opt);
}

}  // namespace stokes
