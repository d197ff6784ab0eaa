// SPDX-License-Identifier: Apache-2.0
//
// Baseline and upper-bound sum capacities: non-cooperative operation and the
// multi-antenna channels obtained by colocating transmitters, receivers, or
// both. bc and mac are deliberately computed along different code paths so
// their equality stays a genuine cross-check.

#pragma once

#include "coopcap/channel.hpp"

namespace coopcap {

struct BoundSet {
    double c_nc{}, c_bc{}, c_mac{}, c_mimo{};
};

/// Non-cooperative sum capacity log2(1 + P); channel independent because the
/// gains all have unit magnitude.
double noncoop_sum_capacity(double budget_p);

/// Colocated-transmitter (broadcast channel) sum capacity, closed form.
double bc_sum_capacity(const PhaseFading& ch, double budget_p);

/// Colocated-receiver (multiple access) sum capacity, evaluated from the
/// column-vector log-det at the equal power split.
double mac_sum_capacity(const PhaseFading& ch, double budget_p);

/// Fully colocated 2x2 MIMO capacity via waterfilling over the channel
/// eigenvalues, solved in closed form for the two modes.
double mimo_capacity(const PhaseFading& ch, double budget_p);

BoundSet compute_bounds(const PhaseFading& ch, double budget_p);

}  // namespace coopcap
