// SPDX-License-Identifier: Apache-2.0

#include "coopcap/txrx_coop.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "coopcap/bounds.hpp"

namespace coopcap {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

std::array<cxd, 2> mat_vec(const Complex2x2& m, const std::array<cxd, 2>& v) {
    return {m.e00 * v[0] + m.e01 * v[1], m.e10 * v[0] + m.e11 * v[1]};
}

double vec_norm(const std::array<cxd, 2>& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

std::array<cxd, 2> complement(const std::array<cxd, 2>& u) {
    return {-std::conj(u[1]), std::conj(u[0])};
}

// 2x2 complex SVD m = U diag(s0, s1) V^H via the eigendecomposition of
// m^H m; rank-deficient inputs get an orthonormal completion.
struct Svd2 {
    Complex2x2 u, v;
    double s0{}, s1{};
};

Svd2 svd2(const Complex2x2& m) {
    Svd2 out;
    const Hermitian2x2 c = congruence(m.adjoint(), Hermitian2x2::scaled_identity(1.0));
    const EigenPair ep = eig_vectors(c);
    out.s0 = std::sqrt(std::max(ep.lam0, 0.0));
    out.s1 = std::sqrt(std::max(ep.lam1, 0.0));
    out.v = ep.vectors;

    if (out.s0 <= 1e-150) {
        out.u = Complex2x2::identity();
        out.v = Complex2x2::identity();
        out.s0 = out.s1 = 0.0;
        return out;
    }

    std::array<cxd, 2> u0 = mat_vec(m, out.v.col(0));
    const double n0 = vec_norm(u0);
    u0 = {u0[0] / n0, u0[1] / n0};

    std::array<cxd, 2> u1;
    if (out.s1 <= 1e-13 * out.s0) {
        u1 = complement(u0);
    } else {
        u1 = mat_vec(m, out.v.col(1));
        const cxd proj = std::conj(u0[0]) * u1[0] + std::conj(u0[1]) * u1[1];
        u1 = {u1[0] - proj * u0[0], u1[1] - proj * u0[1]};
        const double n1 = vec_norm(u1);
        if (n1 <= 1e-13 * out.s1) {
            u1 = complement(u0);
        } else {
            u1 = {u1[0] / n1, u1[1] / n1};
        }
    }
    out.u = {u0[0], u1[0], u0[1], u1[1]};
    return out;
}

// Water level over up to four parallel modes with total power t.
void waterfill_modes(const double* gains, double* powers, int n, double t) {
    std::array<int, 4> order{};
    for (int i = 0; i < n; ++i) {
        order[static_cast<std::size_t>(i)] = i;
        powers[i] = 0.0;
    }
    std::sort(order.begin(), order.begin() + n,
              [&](int a, int b) { return gains[a] > gains[b] || (gains[a] == gains[b] && a < b); });

    int active = 0;
    double level = 0.0;
    double inv_sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double gk = gains[order[static_cast<std::size_t>(k)]];
        if (gk <= 1e-15) {
            break;
        }
        inv_sum += 1.0 / gk;
        const double lvl = (t + inv_sum) / (k + 1);
        if (lvl > 1.0 / gk) {
            active = k + 1;
            level = lvl;
        } else {
            break;
        }
    }
    for (int k = 0; k < active; ++k) {
        const int i = order[static_cast<std::size_t>(k)];
        powers[i] = level - 1.0 / gains[i];
    }
}

// Normalized (per-Hz) state of the dual-MAC problem.
struct WfCore {
    Hermitian2x2 q1, q2;  // normalized covariances, combined trace = t
    double rate{};        // log2 det(I + A1 + A2)
    double r1_clean{};    // log2 det(I + A1), the interference-free split rate
    double r2_clean{};
    int iterations{};
    bool converged{};
    double residual{};
};

Hermitian2x2 uplink_term(const Complex2x2& h, const Hermitian2x2& qn) {
    return congruence(h.adjoint(), qn);
}

// Sum-power iterative waterfilling (damped simultaneous update, the provably
// convergent variant under a joint power constraint).
WfCore waterfill_core(const Complex2x2& h1, const Complex2x2& h2, double t, double tol,
                      const WfCore* warm, std::vector<double>* trace = nullptr) {
    WfCore st;
    if (t <= 0.0) {
        st.converged = true;
        return st;
    }
    if (warm != nullptr && warm->q1.trace() + warm->q2.trace() > 0.0) {
        const double scale = t / (warm->q1.trace() + warm->q2.trace());
        st.q1 = warm->q1.scaled(scale);
        st.q2 = warm->q2.scaled(scale);
    } else {
        st.q1 = Hermitian2x2::scaled_identity(0.25 * t);
        st.q2 = Hermitian2x2::scaled_identity(0.25 * t);
    }

    const Hermitian2x2 eye = Hermitian2x2::scaled_identity(1.0);
    Hermitian2x2 a1 = uplink_term(h1, st.q1);
    Hermitian2x2 a2 = uplink_term(h2, st.q2);
    st.rate = logdet_i_plus(a1 + a2);
    if (trace != nullptr) {
        trace->push_back(st.rate);
    }

    for (int it = 1; it <= 1000; ++it) {
        const EigenPair e1 = eig_vectors(congruence(h1, hermitian_inverse(eye + a2)));
        const EigenPair e2 = eig_vectors(congruence(h2, hermitian_inverse(eye + a1)));

        const double gains[4] = {e1.lam0, e1.lam1, e2.lam0, e2.lam1};
        double powers[4];
        waterfill_modes(gains, powers, 4, t);

        const Hermitian2x2 s1 =
            rank_one(e1.vectors.col(0), powers[0]) + rank_one(e1.vectors.col(1), powers[1]);
        const Hermitian2x2 s2 =
            rank_one(e2.vectors.col(0), powers[2]) + rank_one(e2.vectors.col(1), powers[3]);

        st.q1 = {0.5 * (st.q1.d0 + s1.d0), 0.5 * (st.q1.d1 + s1.d1), 0.5 * (st.q1.off + s1.off)};
        st.q2 = {0.5 * (st.q2.d0 + s2.d0), 0.5 * (st.q2.d1 + s2.d1), 0.5 * (st.q2.off + s2.off)};

        a1 = uplink_term(h1, st.q1);
        a2 = uplink_term(h2, st.q2);
        const double rate = logdet_i_plus(a1 + a2);
        st.residual = rate - st.rate;
        st.rate = rate;
        st.iterations = it;
        if (trace != nullptr) {
            trace->push_back(st.rate);
        }
        if (std::abs(st.residual) < tol) {
            st.converged = true;
            break;
        }
    }
    st.r1_clean = logdet_i_plus(a1);
    st.r2_clean = logdet_i_plus(a2);
    return st;
}

// Bandwidth-scaled MIMO cap: b * sum log2(1 + lam_i p_i / b) with waterfilled
// powers. Upper-bounds every joint-cooperation allocation at this bandwidth
// since the degraded receive matrices never beat the uncompressed channel.
double mimo_cap_bw(const PhaseFading& ch, double budget_p, double b) {
    if (b <= 0.0) {
        return 0.0;
    }
    const Hermitian2x2 gram = congruence(ch.matrix(), Hermitian2x2::scaled_identity(1.0));
    const auto [lam1, lam2] = eig_hermitian(gram);
    const double t = budget_p / b;
    if (lam2 <= 1e-12 || t <= 1.0 / lam2 - 1.0 / lam1) {
        return b * log2_1p(lam1 * t);
    }
    const double level = 0.5 * (t + 1.0 / lam1 + 1.0 / lam2);
    return b * (log2_1p(lam1 * (level - 1.0 / lam1)) + log2_1p(lam2 * (level - 1.0 / lam2)));
}

struct Inversion {
    double p_r1{}, p_r2{};
    double remaining{};
    bool feasible{};
};

// Solve the compression-noise equations for the source-coding rates at the
// given targets, then invert the cooperation-link capacity for the receiver
// powers. The circular dependence on the transmit covariance is resolved by
// one fixed-point pass: size the diagonal covariance to the full budget,
// deduct the receiver powers, and recompute once.
Inversion invert_receiver_powers(const PhaseFading& ch, double n1, double n2, double b,
                                 double b_r, double gain, double budget_p) {
    const auto pass = [&](double data_power, double& p_r1, double& p_r2) -> bool {
        const Hermitian2x2 m = Hermitian2x2::scaled_identity(0.5 * data_power / b);
        const double q1 = quad_form(ch.row1(), m);
        const double q2 = quad_form(ch.row2(), m);
        const double num = congruence(ch.matrix(), m).det() + q2 + q1 + 1.0;
        const double rwz1 = std::isinf(n1) ? 0.0 : b * log2_1p(num / (n1 * (q2 + 1.0)));
        const double rwz2 = std::isinf(n2) ? 0.0 : b * log2_1p(num / (n2 * (q1 + 1.0)));
        const auto invert_link = [&](double rwz) {
            if (rwz <= 0.0) {
                return 0.0;
            }
            if (b_r <= 0.0 || gain <= 0.0) {
                return inf;
            }
            return (std::exp2(rwz / b_r) - 1.0) * b_r / gain;
        };
        p_r1 = invert_link(rwz1);
        p_r2 = invert_link(rwz2);
        return std::isfinite(p_r1) && std::isfinite(p_r2);
    };

    Inversion out;
    double p_r1 = 0.0, p_r2 = 0.0;
    if (!pass(budget_p, p_r1, p_r2)) {
        return out;
    }
    const double data1 = budget_p - p_r1 - p_r2;
    if (data1 <= 0.0) {
        return out;
    }
    if (!pass(data1, p_r1, p_r2)) {
        return out;
    }
    out.p_r1 = p_r1;
    out.p_r2 = p_r2;
    out.remaining = budget_p - p_r1 - p_r2;
    out.feasible = out.remaining > 0.0;
    return out;
}

struct PointDetail {
    double value = -inf;
    EncodeOrder order = EncodeOrder::R1First;
    double n1 = inf, n2 = inf;
    double p_r1 = 0.0, p_r2 = 0.0;
    double s = 0.0, data_power = 0.0, p_t = 0.0;
    double b_t = 1.0, b = 1.0, b_r = 1.0;
};

struct PointEvaluator {
    const PhaseFading& ch;
    const CoopChannel& g;
    double budget_p;
    const TxRxOptions& opts;
    mutable WfCore carry;  // cross-point warm start within one outer search
    mutable bool have_carry = false;

    // One evaluation of the suboptimal-allocation pipeline at fixed targets
    // and bandwidths. `incumbent` enables exact pruning: the rate with the
    // whole remaining budget on data and free exchange upper-bounds the
    // point, so a point whose bound trails the incumbent cannot win.
    // `s_tol` is the bisection tolerance (coarser while scanning).
    PointDetail eval(double b_t, double b, double b_r, double n1, double n2, double incumbent,
                     bool prune, double s_tol) const {
        PointDetail out;
        out.n1 = n1;
        out.n2 = n2;
        out.b_t = b_t;
        out.b = b;
        out.b_r = b_r;
        if (b <= 0.0 || b_t <= 0.0 || g.gain <= 0.0) {
            out.value = 0.0;  // no data band or no exchange link: nothing flows
            return out;
        }

        const Inversion inv = invert_receiver_powers(ch, n1, n2, b, b_r, g.gain, budget_p);
        if (!inv.feasible) {
            return out;
        }
        out.p_r1 = inv.p_r1;
        out.p_r2 = inv.p_r2;

        if (prune && mimo_cap_bw(ch, inv.remaining, b) <= incumbent) {
            return out;  // even the undegraded channel cannot beat the incumbent
        }

        const CompressionState cs = CompressionState::from_targets(n1, n2);
        const auto [h1, h2] = degraded_matrices(ch, cs.eta_1, cs.eta_2);

        const auto rates_at = [&](double s, double& sum, double& pt, EncodeOrder& order) {
            const double data = s * inv.remaining;
            carry = waterfill_core(h1, h2, data / b, opts.wf_tol,
                                   have_carry ? &carry : nullptr);
            have_carry = true;
            sum = b * carry.rate;
            const double r1_clean = std::min(b * carry.r1_clean, sum);
            const double r2_clean = std::min(b * carry.r2_clean, sum);
            const double pt1 = exchange_power_required(r1_clean, sum - r1_clean, g, b_t);
            const double pt2 = exchange_power_required(sum - r2_clean, r2_clean, g, b_t);
            if (pt1 <= pt2) {
                pt = pt1;
                order = EncodeOrder::R1First;
            } else {
                pt = pt2;
                order = EncodeOrder::R2First;
            }
        };

        // s = 1 first: it is both the exact pruning bound and the feasibility
        // probe for the free-exchange limit.
        double sum1, pt1;
        EncodeOrder order1;
        rates_at(1.0, sum1, pt1, order1);
        if (prune && sum1 <= incumbent) {
            return out;
        }
        if (pt1 <= 1e-12 * budget_p) {
            out.value = sum1;
            out.order = order1;
            out.s = 1.0;
            out.data_power = inv.remaining;
            out.p_t = pt1;
            return out;
        }

        double lo = 0.0, hi = 1.0;
        double best_sum = 0.0, best_pt = 0.0;
        EncodeOrder best_order = EncodeOrder::R1First;
        while (hi - lo > s_tol * hi) {
            const double mid = 0.5 * (lo + hi);
            double sum, pt;
            EncodeOrder order;
            rates_at(mid, sum, pt, order);
            if (pt <= (1.0 - mid) * inv.remaining + 1e-12) {
                lo = mid;
                best_sum = sum;
                best_pt = pt;
                best_order = order;
            } else {
                hi = mid;
            }
        }
        out.value = best_sum;
        out.order = best_order;
        out.s = lo;
        out.data_power = lo * inv.remaining;
        out.p_t = best_pt;
        return out;
    }
};

// Grid over the compression-noise targets (log spaced plus the infinity
// corner) with local refinement, at fixed bandwidths.
PointDetail search_targets(const PointEvaluator& ev, double b_t, double b, double b_r,
                           double incumbent, int points, int refine, double s_tol) {
    const TxRxOptions& o = ev.opts;
    PointDetail best;

    const PointDetail corner = ev.eval(b_t, b, b_r, inf, inf, incumbent, true, s_tol);
    if (corner.value > best.value) {
        best = corner;
    }

    double lo1 = o.n_hat_log_min, hi1 = o.n_hat_log_max;
    double lo2 = o.n_hat_log_min, hi2 = o.n_hat_log_max;
    PointDetail best_finite;
    double fx1 = 0.0, fx2 = 0.0;  // log-coordinates of the best finite point

    for (int level = 0; level <= refine; ++level) {
        const double step1 = (hi1 - lo1) / (points - 1);
        const double step2 = (hi2 - lo2) / (points - 1);
        for (int i = 0; i < points; ++i) {
            for (int j = 0; j < points; ++j) {
                const double x1 = lo1 + i * step1;
                const double x2 = lo2 + j * step2;
                const double cur = std::max({incumbent, best.value, best_finite.value});
                const PointDetail p = ev.eval(b_t, b, b_r, std::pow(10.0, x1),
                                              std::pow(10.0, x2), cur, true, s_tol);
                if (p.value > best_finite.value) {
                    best_finite = p;
                    fx1 = x1;
                    fx2 = x2;
                }
            }
        }
        if (best_finite.value > best.value) {
            best = best_finite;
        }
        if (!(best_finite.value > -inf)) {
            break;  // every finite target infeasible; refinement is pointless
        }
        if (level < refine) {
            lo1 = std::max(o.n_hat_log_min, fx1 - step1);
            hi1 = std::min(o.n_hat_log_max, fx1 + step1);
            lo2 = std::max(o.n_hat_log_min, fx2 - step2);
            hi2 = std::min(o.n_hat_log_max, fx2 + step2);
        }
    }
    return best;
}

}  // namespace

double exchange_power_required(double r1, double r2, const CoopChannel& g, double b_t) {
    if (!(r1 >= 0.0 && r2 >= 0.0)) {
        throw std::domain_error("exchange_power_required: negative rate");
    }
    if (r1 == 0.0 && r2 == 0.0) {
        return 0.0;
    }
    if (b_t <= 0.0 || g.gain <= 0.0) {
        return inf;
    }
    return ((std::exp2(r1 / b_t) - 1.0) + (std::exp2(r2 / b_t) - 1.0)) * b_t / g.gain;
}

DpcPair dpc_rate_pair(const PhaseFading& ch, double eta1, double eta2,
                      const Hermitian2x2& sigma_x1, const Hermitian2x2& sigma_x2, double b,
                      EncodeOrder order) {
    DpcPair out;
    out.order = order;
    out.sigma_x1 = sigma_x1;
    out.sigma_x2 = sigma_x2;
    if (b <= 0.0) {
        return out;
    }
    const auto [h1, h2] = degraded_matrices(ch, eta1, eta2);
    const Hermitian2x2 s1 = sigma_x1.scaled(1.0 / b);
    const Hermitian2x2 s2 = sigma_x2.scaled(1.0 / b);
    const Hermitian2x2 sx = s1 + s2;
    if (order == EncodeOrder::R1First) {
        out.r1 = b * (logdet_i_plus(congruence(h1, sx)) - logdet_i_plus(congruence(h1, s2)));
        out.r2 = b * logdet_i_plus(congruence(h2, s2));
    } else {
        out.r1 = b * logdet_i_plus(congruence(h1, s1));
        out.r2 = b * (logdet_i_plus(congruence(h2, sx)) - logdet_i_plus(congruence(h2, s1)));
    }
    out.r1 = std::max(out.r1, 0.0);
    out.r2 = std::max(out.r2, 0.0);
    return out;
}

WaterfillResult iterative_waterfill(const Complex2x2& h1, const Complex2x2& h2,
                                    double sum_power, double b, double tol,
                                    std::vector<double>* rate_trace) {
    if (!(sum_power >= 0.0)) {
        throw std::domain_error("iterative_waterfill: negative sum power");
    }
    WaterfillResult out;
    if (b <= 0.0 || sum_power == 0.0) {
        out.converged = true;
        return out;
    }
    const WfCore st = waterfill_core(h1, h2, sum_power / b, tol, nullptr, rate_trace);
    out.q1 = st.q1.scaled(b);
    out.q2 = st.q2.scaled(b);
    out.sum_rate = b * st.rate;
    out.iterations = st.iterations;
    out.converged = st.converged;
    out.residual = st.residual;
    return out;
}

std::pair<Hermitian2x2, Hermitian2x2> mac_to_bc_covariances(const Complex2x2& h1,
                                                            const Complex2x2& h2,
                                                            const Hermitian2x2& q1,
                                                            const Hermitian2x2& q2, double b,
                                                            EncodeOrder order) {
    if (b <= 0.0) {
        return {Hermitian2x2::zero(), Hermitian2x2::zero()};
    }
    const Hermitian2x2 eye = Hermitian2x2::scaled_identity(1.0);

    // Per-user flip: with the SVD of W = A^{-1/2} H B^{-1/2}, the BC
    // covariance B^{-1/2} V U^H (A^{1/2} Q A^{1/2}) U V^H B^{-1/2} carries the
    // dual-MAC per-user rate over to the broadcast side.
    const auto flip = [&](const Complex2x2& h, const Hermitian2x2& qn, const Hermitian2x2& a,
                          const Hermitian2x2& bmat) {
        const Hermitian2x2 a_sqrt = hermitian_sqrt(a);
        const Hermitian2x2 a_inv_sqrt = hermitian_inv_sqrt(a);
        const Hermitian2x2 b_inv_sqrt = hermitian_inv_sqrt(bmat);
        const Svd2 w = svd2(a_inv_sqrt.full() * h * b_inv_sqrt.full());
        return congruence(b_inv_sqrt.full() * (w.v * w.u.adjoint()),
                          congruence(a_sqrt.full(), qn));
    };

    const Hermitian2x2 q1n = q1.scaled(1.0 / b);
    const Hermitian2x2 q2n = q2.scaled(1.0 / b);

    Hermitian2x2 s1n, s2n;
    if (order == EncodeOrder::R1First) {
        // Receiver 2 encoded last (clean in the BC); in the dual MAC it is
        // decoded first and sees user 1's signal as interference.
        const Hermitian2x2 b2 = eye + uplink_term(h1, q1n);
        s2n = flip(h2, q2n, eye, b2);
        const Hermitian2x2 a1 = eye + congruence(h1, s2n);
        s1n = flip(h1, q1n, a1, eye);
    } else {
        const Hermitian2x2 b1 = eye + uplink_term(h2, q2n);
        s1n = flip(h1, q1n, eye, b1);
        const Hermitian2x2 a2 = eye + congruence(h2, s1n);
        s2n = flip(h2, q2n, a2, eye);
    }
    return {s1n.scaled(b), s2n.scaled(b)};
}

TxRxResult txrx_coop_sum_rate(const PhaseFading& ch, const CoopChannel& g, double budget_p,
                              BandwidthAssumption assumption, const TxRxOptions& opts) {
    if (!(budget_p > 0.0)) {
        throw std::domain_error("txrx_coop_sum_rate: need P > 0");
    }
    const bool shared = assumption == BandwidthAssumption::Shared;

    // Single-scheme corners. Both operating points belong to the joint
    // strategy space (no receiver cooperation / no transmitter cooperation),
    // so the joint optimum can never fall below either.
    const TxCoopResult tx = tx_coop_sum_rate(ch, g, budget_p, assumption);
    const RxCoopResult rx = rx_coop_sum_rate(ch, g, budget_p, assumption);
    const double incumbent = std::max(tx.sum_rate, rx.sum_rate);

    const double scan_s_tol = std::max(opts.scale_tol, 1e-3);
    PointEvaluator ev{ch, g, budget_p, opts, {}, false};
    PointDetail best_grid;

    if (!shared) {
        best_grid = search_targets(ev, 1.0, 1.0, 1.0, incumbent, opts.n_hat_points,
                                   opts.n_hat_refine, scan_s_tol);
    } else {
        // Scanning every bandwidth point at full target resolution is far too
        // slow for Monte Carlo use; the scan runs a coarse target grid per
        // bandwidth point and the winning bandwidth is re-searched at full
        // resolution below.
        const int n = opts.bw_points;
        double lo_t = 0.0, hi_t = 1.0, lo_r = 0.0, hi_r = 1.0;
        double bx_t = 1.0 / 3.0, bx_r = 1.0 / 3.0;
        bool have_bw = false;
        for (int level = 0; level <= opts.bw_refine; ++level) {
            const double step_t = (hi_t - lo_t) / (n - 1);
            const double step_r = (hi_r - lo_r) / (n - 1);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    const double b_t = lo_t + i * step_t;
                    const double b_r = lo_r + j * step_r;
                    const double b = 1.0 - b_t - b_r;
                    if (b < -1e-12) {
                        continue;
                    }
                    const double cur = std::max(incumbent, best_grid.value);
                    if (mimo_cap_bw(ch, budget_p, std::max(b, 0.0)) <= cur) {
                        continue;  // bandwidth cap cannot beat the incumbent
                    }
                    const PointDetail p =
                        search_targets(ev, b_t, std::max(b, 0.0), b_r, cur,
                                       opts.scan_n_hat_points, opts.scan_n_hat_refine,
                                       scan_s_tol);
                    if (p.value > best_grid.value) {
                        best_grid = p;
                        bx_t = b_t;
                        bx_r = b_r;
                        have_bw = true;
                    }
                }
            }
            if (!have_bw || level == opts.bw_refine) {
                break;
            }
            lo_t = std::max(0.0, bx_t - step_t);
            hi_t = std::min(1.0, bx_t + step_t);
            lo_r = std::max(0.0, bx_r - step_r);
            hi_r = std::min(1.0, bx_r + step_r);
        }
        if (have_bw) {
            const PointDetail full = search_targets(
                ev, bx_t, std::max(1.0 - bx_t - bx_r, 0.0), bx_r,
                std::max(incumbent, best_grid.value), opts.n_hat_points, opts.n_hat_refine,
                scan_s_tol);
            if (full.value > best_grid.value) {
                best_grid = full;
            }
        }
    }

    // Precise re-evaluation of the winning grid point (the scan ran with a
    // coarse power-scale tolerance and warm-started waterfilling).
    if (best_grid.value > incumbent) {
        ev.have_carry = false;
        const PointDetail exact = ev.eval(best_grid.b_t, best_grid.b, best_grid.b_r,
                                          best_grid.n1, best_grid.n2, -inf, false,
                                          opts.scale_tol);
        best_grid = exact;
    }

    TxRxResult out;
    if (best_grid.value > incumbent) {
        const PointDetail d = best_grid;
        out.sum_rate = d.value;
        out.mode = TxRxMode::Grid;
        out.order = d.order;
        out.n_hat_targets = {d.n1, d.n2};
        out.bandwidths = shared ? BandwidthAlloc::shared(d.b_t, std::max(1.0 - d.b_t - d.b_r, 0.0),
                                                         d.b_r)
                                : BandwidthAlloc::dedicated(true, true);

        // Recover the transmit covariances at the reported optimum for the
        // power report (and so callers can run the duality cross-check).
        const auto [h1, h2] =
            degraded_matrices(ch, eta_from_n_hat(d.n1), eta_from_n_hat(d.n2));
        const WaterfillResult wf = iterative_waterfill(h1, h2, d.data_power, d.b, opts.wf_tol);
        const auto [sx1, sx2] = mac_to_bc_covariances(h1, h2, wf.q1, wf.q2, d.b, d.order);
        out.power = PowerAlloc{std::max(sx1.d0 + sx2.d0, 0.0), std::max(sx1.d1 + sx2.d1, 0.0),
                               d.p_t, d.p_r1, d.p_r2};
    } else if (tx.sum_rate >= rx.sum_rate) {
        out.sum_rate = tx.sum_rate;
        out.mode = TxRxMode::TxCorner;
        out.n_hat_targets = {inf, inf};
        out.bandwidths = tx.bandwidths;
        const double data = 0.5 * (budget_p - tx.p_t_star);
        out.power = PowerAlloc{data, data, tx.p_t_star, 0.0, 0.0};
        if (tx.sum_rate == 0.0) {
            out.power = PowerAlloc{};
        }
    } else {
        out.sum_rate = rx.sum_rate;
        out.mode = TxRxMode::RxCorner;
        out.n_hat_targets = {rx.n_hat, rx.n_hat};
        out.bandwidths = rx.bandwidths;
        out.power = rx.power;
    }
    return out;
}

}  // namespace coopcap
