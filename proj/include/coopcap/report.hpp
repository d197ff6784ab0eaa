// SPDX-License-Identifier: Apache-2.0
//
// Sweep result serialization. CSV is the plotting format; JSON carries the
// full request echo. Doubles are printed with 17 significant digits so the
// files round-trip exactly and rerunning a seed reproduces them byte for byte.

#pragma once

#include <string>
#include <vector>

#include "coopcap/montecarlo.hpp"

namespace coopcap {

struct SweepCsvRow {
    double g_db{};
    std::string scheme;
    double mean_rate_bits{};
    double stderr_of_mean{};
    long samples{};
    std::uint64_t seed{};
};

/// CSV with header g_db,scheme,mean_rate_bits,stderr,samples,seed; one row
/// per (gain point, scheme). g_db_labels must match the sweep's gain grid.
std::string sweep_to_csv(const SweepResult& result, const std::vector<double>& g_db_labels);

std::vector<SweepCsvRow> parse_sweep_csv(const std::string& text);

std::string sweep_to_json(const SweepResult& result, const std::vector<double>& g_db_labels);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace coopcap
