// SPDX-License-Identifier: Apache-2.0

#include "coopcap/montecarlo.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <thread>

#include "coopcap/bounds.hpp"
#include "coopcap/channel.hpp"
#include "coopcap/tx_coop.hpp"

namespace coopcap {

namespace {

struct SampleRow {
    std::vector<double> values;  // [scheme index * n_g + g index]
    bool failed = false;
};

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::NC: return "nc";
        case Scheme::TX: return "tx";
        case Scheme::RX: return "rx";
        case Scheme::TXRX: return "txrx";
        case Scheme::BC: return "bc";
        case Scheme::MAC: return "mac";
        case Scheme::MIMO: return "mimo";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    for (Scheme s : {Scheme::NC, Scheme::TX, Scheme::RX, Scheme::TXRX, Scheme::BC, Scheme::MAC,
                     Scheme::MIMO}) {
        if (name == scheme_name(s)) {
            return s;
        }
    }
    throw std::invalid_argument("unknown scheme: " + name);
}

void SweepSpec::validate() const {
    if (samples < 1) {
        throw std::invalid_argument("SweepSpec: samples must be >= 1");
    }
    if (g_grid.empty()) {
        throw std::invalid_argument("SweepSpec: empty gain grid");
    }
    for (std::size_t i = 0; i < g_grid.size(); ++i) {
        if (!(g_grid[i] >= 0.0) || (i > 0 && !(g_grid[i] > g_grid[i - 1]))) {
            throw std::invalid_argument("SweepSpec: gain grid must be nonnegative and strictly increasing");
        }
    }
    if (schemes.empty()) {
        throw std::invalid_argument("SweepSpec: no schemes requested");
    }
    if (!(budget_p > 0.0)) {
        throw std::invalid_argument("SweepSpec: budget must be positive");
    }
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const std::size_t n_s = spec.schemes.size();
    const std::size_t n_g = spec.g_grid.size();
    const int samples = spec.samples;

    std::vector<SampleRow> rows(static_cast<std::size_t>(samples));

    const auto eval_sample = [&](int i) {
        SampleRow row;
        row.values.assign(n_s * n_g, 0.0);
        const PhaseFading ch = sample_phase_fading(spec.master_seed, static_cast<std::uint64_t>(i));
        try {
            // Gain-independent schemes once per sample.
            double v_nc = 0.0, v_bc = 0.0, v_mac = 0.0, v_mimo = 0.0;
            for (Scheme s : spec.schemes) {
                switch (s) {
                    case Scheme::NC: v_nc = noncoop_sum_capacity(spec.budget_p); break;
                    case Scheme::BC: v_bc = bc_sum_capacity(ch, spec.budget_p); break;
                    case Scheme::MAC: v_mac = mac_sum_capacity(ch, spec.budget_p); break;
                    case Scheme::MIMO: v_mimo = mimo_capacity(ch, spec.budget_p); break;
                    default: break;
                }
            }
            for (std::size_t gi = 0; gi < n_g; ++gi) {
                const CoopChannel link(spec.g_grid[gi]);
                for (std::size_t si = 0; si < n_s; ++si) {
                    double v = 0.0;
                    switch (spec.schemes[si]) {
                        case Scheme::NC: v = v_nc; break;
                        case Scheme::BC: v = v_bc; break;
                        case Scheme::MAC: v = v_mac; break;
                        case Scheme::MIMO: v = v_mimo; break;
                        case Scheme::TX:
                            v = tx_coop_sum_rate(ch, link, spec.budget_p, spec.assumption).sum_rate;
                            break;
                        case Scheme::RX:
                            v = rx_coop_sum_rate(ch, link, spec.budget_p, spec.assumption,
                                                 spec.rx_options)
                                    .sum_rate;
                            break;
                        case Scheme::TXRX:
                            v = txrx_coop_sum_rate(ch, link, spec.budget_p, spec.assumption,
                                                   spec.txrx_options)
                                    .sum_rate;
                            break;
                    }
                    if (!std::isfinite(v)) {
                        throw std::runtime_error("non-finite rate");
                    }
                    row.values[si * n_g + gi] = v;
                }
            }
        } catch (const std::exception&) {
            row.failed = true;
        }
        rows[static_cast<std::size_t>(i)] = std::move(row);
    };

    int workers = spec.workers > 0 ? spec.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, samples));
    if (workers == 1) {
        for (int i = 0; i < samples; ++i) {
            eval_sample(i);
        }
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < samples; i = next.fetch_add(1)) {
                    eval_sample(i);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    // Fixed-order reduction over sample indices keeps results bit-identical
    // for every worker count.
    SweepResult out;
    out.spec = spec;
    out.cells.assign(n_s, std::vector<SweepCell>(n_g));
    std::uint64_t digest = 0xcbf29ce484222325ULL;
    int failures = 0;
    long used = 0;
    for (int i = 0; i < samples; ++i) {
        const SampleRow& row = rows[static_cast<std::size_t>(i)];
        if (row.failed) {
            ++failures;
            continue;
        }
        const PhaseFading ch = sample_phase_fading(spec.master_seed, static_cast<std::uint64_t>(i));
        digest = fnv1a(digest, ch.theta.data(), sizeof(double) * 4);
        ++used;
    }
    out.failures = failures;
    out.realization_digest = digest;
    if (failures > 0 && failures * 100 > samples) {
        throw std::runtime_error("run_sweep: more than 1% of samples failed");
    }
    if (used == 0) {
        throw std::runtime_error("run_sweep: no usable samples");
    }

    for (std::size_t si = 0; si < n_s; ++si) {
        for (std::size_t gi = 0; gi < n_g; ++gi) {
            double sum = 0.0;
            for (int i = 0; i < samples; ++i) {
                const SampleRow& row = rows[static_cast<std::size_t>(i)];
                if (!row.failed) {
                    sum += row.values[si * n_g + gi];
                }
            }
            const double mean = sum / static_cast<double>(used);
            double ss = 0.0;
            for (int i = 0; i < samples; ++i) {
                const SampleRow& row = rows[static_cast<std::size_t>(i)];
                if (!row.failed) {
                    const double d = row.values[si * n_g + gi] - mean;
                    ss += d * d;
                }
            }
            const double sd = used > 1 ? std::sqrt(ss / static_cast<double>(used - 1)) : 0.0;
            out.cells[si][gi] = {mean, sd / std::sqrt(static_cast<double>(used)), used};
        }
    }

    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

double sample_mean_phi(int samples, std::uint64_t seed) {
    if (samples < 100) {
        throw std::invalid_argument("sample_mean_phi: need at least 100 samples");
    }
    double sum = 0.0;
    for (int i = 0; i < samples; ++i) {
        sum += sample_phase_fading(seed, static_cast<std::uint64_t>(i)).phi();
    }
    return sum / samples;
}

}  // namespace coopcap
