// SPDX-License-Identifier: Apache-2.0
//
// Joint transmitter-and-receiver cooperation. With full message exchange at
// the transmitters and compress-and-forward at the receivers, the network is
// a broadcast channel with two 2-antenna receivers. For fixed compression
// noise targets the DPC covariances come from sum-power iterative
// waterfilling on the dual MAC; a bisection on the data-power scale then
// finds the largest allocation whose exchange power still fits the budget.

#pragma once

#include <utility>
#include <vector>

#include "coopcap/allocation.hpp"
#include "coopcap/channel.hpp"
#include "coopcap/linalg.hpp"
#include "coopcap/rx_coop.hpp"
#include "coopcap/tx_coop.hpp"

namespace coopcap {

enum class EncodeOrder { R1First, R2First };

struct DpcPair {
    EncodeOrder order{EncodeOrder::R1First};
    double r1{}, r2{};
    Hermitian2x2 sigma_x1, sigma_x2;
};

struct WaterfillResult {
    Hermitian2x2 q1, q2;  // dual-MAC uplink covariances, total trace <= sum power
    double sum_rate{};
    int iterations{};
    bool converged{};
    double residual{};
};

/// How the reported optimum was obtained: a grid point of the joint search,
/// or one of the single-scheme corners (no receiver cooperation / no
/// transmitter cooperation) that the joint strategy space contains.
enum class TxRxMode { Grid, TxCorner, RxCorner };

struct TxRxOptions {
    int n_hat_points = 16;      // per axis, log-spaced
    double n_hat_log_min = -3.0;
    double n_hat_log_max = 3.0;
    int n_hat_refine = 2;
    int bw_points = 9;          // per axis of the (b_t, b_r) simplex grid
    int bw_refine = 2;
    int scan_n_hat_points = 8;  // coarse target grid while scanning bandwidths
    int scan_n_hat_refine = 0;
    double scale_tol = 1e-6;    // relative tolerance of the data-power bisection
    double wf_tol = 1e-9;       // waterfilling fixed-point tolerance, bits
};

struct TxRxResult {
    double sum_rate{};
    PowerAlloc power;
    BandwidthAlloc bandwidths;
    std::pair<double, double> n_hat_targets{};
    EncodeOrder order{EncodeOrder::R1First};
    TxRxMode mode{TxRxMode::Grid};
};

/// Minimum exchange power supporting the rate pair (r1, r2) over the
/// transmitter cooperation link; +inf when b_t = 0 or G = 0 with positive rates.
double exchange_power_required(double r1, double r2, const CoopChannel& g, double b_t);

/// DPC rate pair for given degradations, covariances and encode order.
DpcPair dpc_rate_pair(const PhaseFading& ch, double eta1, double eta2,
                      const Hermitian2x2& sigma_x1, const Hermitian2x2& sigma_x2, double b,
                      EncodeOrder order);

/// Sum-power iterative waterfilling on the dual MAC of the broadcast channel
/// with receiver matrices (h1, h2): maximizes
/// b * log2 |I + h1^H (Q1/b) h1 + h2^H (Q2/b) h2| over tr(Q1)+tr(Q2) <= sum_power.
/// rate_trace, when given, receives the per-iteration objective values.
WaterfillResult iterative_waterfill(const Complex2x2& h1, const Complex2x2& h2,
                                    double sum_power, double b, double tol = 1e-9,
                                    std::vector<double>* rate_trace = nullptr);

/// Map dual-MAC covariances to broadcast DPC covariances (flipped-channel
/// duality); the DPC rates at the given encode order reproduce the MAC rates.
std::pair<Hermitian2x2, Hermitian2x2> mac_to_bc_covariances(const Complex2x2& h1,
                                                            const Complex2x2& h2,
                                                            const Hermitian2x2& q1,
                                                            const Hermitian2x2& q2, double b,
                                                            EncodeOrder order);

/// Joint-cooperation sum rate: outer search over compression noise targets
/// (and bandwidths under Shared), with the exact transmitter-only and
/// receiver-only operating points included as corner candidates.
TxRxResult txrx_coop_sum_rate(const PhaseFading& ch, const CoopChannel& g, double budget_p,
                              BandwidthAssumption assumption, const TxRxOptions& opts = {});

}  // namespace coopcap
