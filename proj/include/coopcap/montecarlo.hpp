// SPDX-License-Identifier: Apache-2.0
//
// Seeded Monte Carlo harness: expected rates versus cooperation gain for a
// chosen set of schemes. Paired sampling (one realization shared by every
// scheme and every gain point) plus counter-based seeding make results
// bit-identical under any worker count.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coopcap/allocation.hpp"
#include "coopcap/rx_coop.hpp"
#include "coopcap/txrx_coop.hpp"

namespace coopcap {

enum class Scheme { NC, TX, RX, TXRX, BC, MAC, MIMO };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

struct SweepSpec {
    std::vector<double> g_grid;  // linear gains, strictly increasing
    double budget_p = 1.0;
    BandwidthAssumption assumption = BandwidthAssumption::Dedicated;
    int samples = 1000;
    std::uint64_t master_seed = 0;
    std::vector<Scheme> schemes;
    int workers = 0;  // 0 = hardware concurrency
    RxSearchOptions rx_options;
    TxRxOptions txrx_options;

    void validate() const;
};

struct SweepCell {
    double mean{};
    double stderr_of_mean{};
    long samples_used{};
};

struct SweepResult {
    SweepSpec spec;                             // echo of the request
    std::vector<std::vector<SweepCell>> cells;  // [scheme index][g index]
    int failures{};
    double wall_seconds{};
    std::uint64_t realization_digest{};  // digest of the realizations actually used
};

SweepResult run_sweep(const SweepSpec& spec);

/// Sample mean of phi; harness self-test (phase symmetry gives E[phi] = 1).
double sample_mean_phi(int samples, std::uint64_t seed);

}  // namespace coopcap
