// SPDX-License-Identifier: Apache-2.0
//
// Transmitter cooperation: the two transmitters exchange full messages over
// the cooperation link and then jointly encode with dirty paper coding. The
// achieved sum rate is min(exchange rate, DPC sum rate); since one branch
// rises with the exchange power and the other falls, the optimum sits at the
// crossing, which has a closed form under dedicated bandwidth.

#pragma once

#include "coopcap/allocation.hpp"
#include "coopcap/channel.hpp"

namespace coopcap {

enum class TxBranch { ClosedFormGeneric, ClosedFormDegenerate, NumericRoot };

struct TxCoopResult {
    double sum_rate{};
    double p_t_star{};
    BandwidthAlloc bandwidths;
    TxBranch branch{TxBranch::ClosedFormGeneric};
};

/// DPC sum rate of the equivalent broadcast channel:
/// b * log2(1 + 2(p1+p2)/b + 2 phi p1 p2 / b^2). Zero at b = 0 (limit).
double dpc_sum_rate(const PhaseFading& ch, double p1, double p2, double b);

/// Total message-exchange rate when each transmitter spends p_t/2:
/// 2 * b_t * log2(1 + G p_t / (2 b_t)).
double exchange_rate(const CoopChannel& g, double p_t, double b_t);

struct PtStar {
    double value{};
    TxBranch branch{TxBranch::ClosedFormGeneric};
};

/// Closed-form optimal exchange power under dedicated bandwidth (b_t = b = 1),
/// clamped into [0, P]. Picks the degenerate branch when G^2 ~ 2 phi.
PtStar exchange_power_star_dedicated(const PhaseFading& ch, const CoopChannel& g,
                                     double budget_p);

/// Exchange power equating the two branches for given (b_t, b) with
/// b_t + b = 1, found by bisection on [0, P].
double exchange_power_star_shared(const PhaseFading& ch, const CoopChannel& g, double budget_p,
                                  double b_t, double b);

/// Transmitter-cooperation sum rate. Dedicated evaluates the closed-form
/// crossing; Shared additionally optimizes the bandwidth split b_t.
TxCoopResult tx_coop_sum_rate(const PhaseFading& ch, const CoopChannel& g, double budget_p,
                              BandwidthAssumption assumption);

}  // namespace coopcap
