// SPDX-License-Identifier: Apache-2.0

#include "coopcap/rx_coop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "coopcap/optimize.hpp"

namespace coopcap {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

}  // namespace

CompressionState CompressionState::from_targets(double n_hat_1, double n_hat_2) {
    if (!(n_hat_1 > 0.0) || !(n_hat_2 > 0.0)) {
        throw std::domain_error("CompressionState: compression noise must be positive");
    }
    return {n_hat_1, n_hat_2, eta_from_n_hat(n_hat_1), eta_from_n_hat(n_hat_2)};
}

double eta_from_n_hat(double n_hat) {
    if (std::isinf(n_hat)) {
        return 0.0;
    }
    return 1.0 / (1.0 + n_hat);
}

double compression_noise(const PhaseFading& ch, const Hermitian2x2& sigma_x, double b,
                         double r_wz, ForwardDirection direction) {
    if (!(b > 0.0) || !(r_wz >= 0.0)) {
        throw std::domain_error("compression_noise: need b > 0 and r_wz >= 0");
    }
    if (r_wz == 0.0) {
        return inf;
    }
    const Hermitian2x2 m = sigma_x.scaled(1.0 / b);
    const double q1 = quad_form(ch.row1(), m);
    const double q2 = quad_form(ch.row2(), m);
    const double num = congruence(ch.matrix(), m).det() + q2 + q1 + 1.0;
    const double q_own = (direction == ForwardDirection::At1From2) ? q1 : q2;
    const double den = (std::exp2(r_wz / b) - 1.0) * (q_own + 1.0);
    return num / den;
}

double compression_noise_symmetric(const PhaseFading& ch, double p1, double p2, double b,
                                   double p_r, double b_r, const CoopChannel& g) {
    if (!(b > 0.0) || !(p1 >= 0.0 && p2 >= 0.0 && p_r >= 0.0 && b_r >= 0.0)) {
        throw std::domain_error("compression_noise_symmetric: bad arguments");
    }
    if (p_r == 0.0 || b_r == 0.0 || g.gain == 0.0) {
        return inf;
    }
    const double num = 2.0 * ch.phi() * (p1 * p2) / (b * b) + 2.0 * (p1 + p2) / b + 1.0;
    const double growth = std::pow(1.0 + g.gain * p_r / (2.0 * b_r), b_r / b) - 1.0;
    if (growth <= 0.0) {
        return inf;
    }
    return num / (growth * ((p1 + p2) / b + 1.0));
}

double ic_sum_rate(const PhaseFading& ch, double p1, double p2, double b, double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::domain_error("ic_sum_rate: eta outside [0, 1]");
    }
    if (!(p1 >= 0.0 && p2 >= 0.0 && b >= 0.0)) {
        throw std::domain_error("ic_sum_rate: negative argument");
    }
    if (b == 0.0) {
        return 0.0;
    }
    const double x = (1.0 + eta) * (p1 + p2) / b + 2.0 * eta * ch.phi() * (p1 * p2) / (b * b);
    return b * std::log1p(x) / std::numbers::ln2;
}

RxCoopResult rx_coop_sum_rate(const PhaseFading& ch, const CoopChannel& g, double budget_p,
                              BandwidthAssumption assumption, const RxSearchOptions& opts) {
    if (!(budget_p > 0.0)) {
        throw std::domain_error("rx_coop_sum_rate: need P > 0");
    }
    const bool shared = assumption == BandwidthAssumption::Shared;

    // Variables: receiver power p_r, optionally the data power split w (wide
    // search), optionally the cooperation band b_r (Shared). Data channel
    // gets everything left: b = 1 - b_r, p1 + p2 = P - p_r.
    const auto value_at = [&](double p_r, double w, double b_r) {
        const double b = shared ? 1.0 - b_r : 1.0;
        if (b <= 0.0) {
            return 0.0;
        }
        // grid endpoints can overshoot the box edge by one rounding step
        const double data = std::max(budget_p - p_r, 0.0);
        const double p1 = w * data;
        const double p2 = (1.0 - w) * data;
        const double n_hat = compression_noise_symmetric(ch, p1, p2, b, p_r, b_r, g);
        return ic_sum_rate(ch, p1, p2, b, eta_from_n_hat(n_hat));
    };

    std::vector<std::pair<double, double>> box;
    box.emplace_back(0.0, budget_p);  // p_r
    if (opts.wide) {
        box.emplace_back(0.0, 1.0);  // w
    }
    if (shared) {
        box.emplace_back(0.0, 1.0);  // b_r
    }

    const SearchReport rep = grid_max(
        [&](const std::vector<double>& x) {
            const double p_r = x[0];
            const double w = opts.wide ? x[1] : 0.5;
            const double b_r = shared ? x.back() : 1.0;
            return value_at(p_r, w, b_r);
        },
        box, opts.grid_points, opts.refine_levels);

    const double p_r = std::min(rep.arg[0], budget_p);
    const double w = opts.wide ? rep.arg[1] : 0.5;
    const double b_r = shared ? rep.arg.back() : 1.0;
    const double b = shared ? 1.0 - b_r : 1.0;
    const double data = std::max(budget_p - p_r, 0.0);

    RxCoopResult out;
    out.sum_rate = rep.value;
    out.power = PowerAlloc{w * data, (1.0 - w) * data, 0.0, 0.5 * p_r, 0.5 * p_r};
    out.bandwidths = shared ? BandwidthAlloc::shared(0.0, b, b_r)
                            : BandwidthAlloc::dedicated(false, true);
    out.n_hat = (b > 0.0) ? compression_noise_symmetric(ch, out.power.p1, out.power.p2, b, p_r,
                                                        b_r, g)
                          : inf;
    return out;
}

}  // namespace coopcap
