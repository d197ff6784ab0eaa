// SPDX-License-Identifier: Apache-2.0
//
// Receiver cooperation via Wyner-Ziv compress-and-forward. Each receiver
// forwards a quantized copy of its observation over the cooperation link; the
// network then behaves as a two-antenna-per-receiver interference channel
// whose forwarded antenna is degraded by the compression noise.

#pragma once

#include "coopcap/allocation.hpp"
#include "coopcap/channel.hpp"
#include "coopcap/linalg.hpp"

namespace coopcap {

/// Which receiver holds the compressed observation: At1From2 means receiver 1
/// decodes with receiver 2's forwarded signal (compression noise variance
/// N_hat_2), and vice versa.
enum class ForwardDirection { At1From2, At2From1 };

struct CompressionState {
    double n_hat_1{}, n_hat_2{};  // compression noise variances, may be +inf
    double eta_1{}, eta_2{};      // antenna-gain degradation 1/(1 + n_hat)

    static CompressionState from_targets(double n_hat_1, double n_hat_2);
};

struct RxCoopResult {
    double sum_rate{};
    PowerAlloc power;
    BandwidthAlloc bandwidths;
    double n_hat{};
};

/// Antenna-gain degradation for a compression noise variance (1/(1+n); 0 at +inf).
double eta_from_n_hat(double n_hat);

/// Wyner-Ziv compression noise variance for a general transmit covariance and
/// source-coding rate r_wz; +inf when r_wz = 0 (no cooperation).
double compression_noise(const PhaseFading& ch, const Hermitian2x2& sigma_x, double b,
                         double r_wz, ForwardDirection direction);

/// Symmetric compression noise under the equal receiver power split p_r/2 and
/// independent (diagonal) transmit signals; +inf when p_r = 0 or b_r = 0.
double compression_noise_symmetric(const PhaseFading& ch, double p1, double p2, double b,
                                   double p_r, double b_r, const CoopChannel& g);

/// Interference-channel sum capacity with symmetric degradation eta:
/// b * log2(1 + (1+eta)(p1+p2)/b + 2 eta phi p1 p2 / b^2).
double ic_sum_rate(const PhaseFading& ch, double p1, double p2, double b, double eta);

struct RxSearchOptions {
    int grid_points = 64;
    int refine_levels = 3;
    bool wide = false;  // also search asymmetric data powers (verification runs)
};

/// Receiver-cooperation sum rate via grid search over the receiver power (and
/// bandwidth split when Shared). The p_r = 0 corner is always on the grid, so
/// the result never falls below non-cooperative operation.
RxCoopResult rx_coop_sum_rate(const PhaseFading& ch, const CoopChannel& g, double budget_p,
                              BandwidthAssumption assumption, const RxSearchOptions& opts = {});

}  // namespace coopcap
