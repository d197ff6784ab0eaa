// SPDX-License-Identifier: Apache-2.0

#include "coopcap/tx_coop.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coopcap/optimize.hpp"

namespace coopcap {

namespace {

double min_branch_value(const PhaseFading& ch, const CoopChannel& g, double budget_p, double p_t,
                        double b_t, double b) {
    const double data = 0.5 * (budget_p - p_t);
    return std::min(exchange_rate(g, p_t, b_t), dpc_sum_rate(ch, data, data, b));
}

}  // namespace

double dpc_sum_rate(const PhaseFading& ch, double p1, double p2, double b) {
    if (!(p1 >= 0.0 && p2 >= 0.0 && b >= 0.0)) {
        throw std::domain_error("dpc_sum_rate: negative argument");
    }
    if (b == 0.0) {
        return 0.0;
    }
    const double x = 2.0 * (p1 + p2) / b + 2.0 * ch.phi() * (p1 * p2) / (b * b);
    return b * std::log1p(x) / std::numbers::ln2;
}

double exchange_rate(const CoopChannel& g, double p_t, double b_t) {
    return 2.0 * awgn_rate(b_t, 0.5 * p_t, g.gain);
}

PtStar exchange_power_star_dedicated(const PhaseFading& ch, const CoopChannel& g,
                                     double budget_p) {
    if (!(budget_p > 0.0) || !(g.gain > 0.0)) {
        throw std::domain_error("exchange_power_star_dedicated: need P > 0 and G > 0");
    }
    const double phi = ch.phi();
    const double G = g.gain;
    const double P = budget_p;

    PtStar out;
    const double gap = G * G - 2.0 * phi;
    if (std::abs(gap) <= 1e-9 * std::max(G * G, 2.0 * phi)) {
        out.branch = TxBranch::ClosedFormDegenerate;
        out.value = P * (phi * P + 4.0) / (2.0 * (G + phi * P + 2.0));
    } else {
        out.branch = TxBranch::ClosedFormGeneric;
        const double d = 4.0 * (G + 1.0) + G * G * (2.0 * P + 1.0) +
                         phi * G * P * (2.0 + 0.5 * G * P);
        out.value = 2.0 * (std::sqrt(d) - G - phi * P - 2.0) / gap;
    }
    out.value = std::clamp(out.value, 0.0, P);
    return out;
}

double exchange_power_star_shared(const PhaseFading& ch, const CoopChannel& g, double budget_p,
                                  double b_t, double b) {
    if (!(budget_p > 0.0) || !(b > 0.0) || std::abs(b_t + b - 1.0) > 1e-9) {
        throw std::domain_error("exchange_power_star_shared: need P > 0, b > 0, b_t + b = 1");
    }
    if (g.gain == 0.0 || b_t == 0.0) {
        return 0.0;  // no exchange possible, crossing degenerates to zero rate
    }
    const auto diff = [&](double p_t) {
        const double data = 0.5 * (budget_p - p_t);
        return exchange_rate(g, p_t, b_t) - dpc_sum_rate(ch, data, data, b);
    };
    const double at_zero = diff(0.0);
    if (at_zero >= 0.0) {
        return 0.0;  // only when the data channel supports no rate at all
    }
    if (diff(budget_p) <= 0.0) {
        return budget_p;  // exchange never catches up inside the budget
    }
    return bisect_root(diff, 0.0, budget_p, 1e-9).arg[0];
}

TxCoopResult tx_coop_sum_rate(const PhaseFading& ch, const CoopChannel& g, double budget_p,
                              BandwidthAssumption assumption) {
    if (!(budget_p > 0.0)) {
        throw std::domain_error("tx_coop_sum_rate: need P > 0");
    }

    TxCoopResult out;
    if (assumption == BandwidthAssumption::Dedicated) {
        out.bandwidths = BandwidthAlloc::dedicated(true, false);
        if (g.gain == 0.0) {
            return out;  // full message exchange is impossible, rate 0
        }
        const PtStar star = exchange_power_star_dedicated(ch, g, budget_p);
        out.branch = star.branch;
        out.p_t_star = star.value;
        out.sum_rate = min_branch_value(ch, g, budget_p, star.value, 1.0, 1.0);
        return out;
    }

    out.branch = TxBranch::NumericRoot;
    if (g.gain == 0.0) {
        out.bandwidths = BandwidthAlloc::shared(0.0, 1.0, 0.0);
        return out;
    }

    const auto inner = [&](double b_t) {
        const double b = 1.0 - b_t;
        if (b_t <= 0.0 || b <= 0.0) {
            return 0.0;
        }
        const double p_t = exchange_power_star_shared(ch, g, budget_p, b_t, b);
        return min_branch_value(ch, g, budget_p, p_t, b_t, b);
    };

    // Coarse pre-scan picks the golden-section bracket; fall back to grid
    // search if the scan reveals more than one local maximum (min() kinks can
    // break unimodality).
    constexpr int scan_n = 17;
    double xs[scan_n], vs[scan_n];
    int best = 0;
    int local_maxima = 0;
    for (int i = 0; i < scan_n; ++i) {
        xs[i] = static_cast<double>(i) / (scan_n - 1);
        vs[i] = inner(xs[i]);
        if (vs[i] > vs[best]) {
            best = i;
        }
    }
    for (int i = 1; i + 1 < scan_n; ++i) {
        if (vs[i] > vs[i - 1] + 1e-12 && vs[i] > vs[i + 1] + 1e-12) {
            ++local_maxima;
        }
    }

    double b_t_star;
    double value;
    if (local_maxima <= 1) {
        const double lo = xs[std::max(0, best - 1)];
        const double hi = xs[std::min(scan_n - 1, best + 1)];
        if (hi > lo) {
            const SearchReport rep = golden_max(inner, lo, hi, 1e-6);
            b_t_star = rep.arg[0];
            value = rep.value;
        } else {
            b_t_star = xs[best];
            value = vs[best];
        }
    } else {
        const SearchReport rep = grid_max([&](const std::vector<double>& x) { return inner(x[0]); },
                                          {{0.0, 1.0}}, 64, 3);
        b_t_star = rep.arg[0];
        value = rep.value;
    }

    // Endpoints carry zero rate; never report worse than them.
    if (value < 0.0) {
        value = 0.0;
        b_t_star = 0.0;
    }

    const double b = 1.0 - b_t_star;
    out.p_t_star = (b > 0.0 && b_t_star > 0.0)
                       ? exchange_power_star_shared(ch, g, budget_p, b_t_star, b)
                       : 0.0;
    out.sum_rate = value;
    out.bandwidths = BandwidthAlloc::shared(b_t_star, b, 0.0);
    return out;
}

}  // namespace coopcap
