// SPDX-License-Identifier: Apache-2.0
//
// coopcap command line: single-realization rate reports, Monte Carlo sweeps
// over the cooperation gain, and capacity bound tables. All dB to linear
// conversion happens here; the library works in linear units only.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coopcap/bounds.hpp"
#include "coopcap/channel.hpp"
#include "coopcap/montecarlo.hpp"
#include "coopcap/report.hpp"
#include "coopcap/tx_coop.hpp"

namespace {

using namespace coopcap;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::vector<double> parse_db_range(const std::string& text) {
    double lo = 0.0, hi = 0.0, step = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0.0) ||
        hi < lo) {
        throw CLI::ValidationError("--g-db-range", "expected lo:hi:step with step > 0");
    }
    std::vector<double> out;
    const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (int k = 0; k < n; ++k) {
        out.push_back(lo + k * step);
    }
    return out;
}

std::vector<Scheme> parse_schemes(const std::string& csv) {
    std::vector<Scheme> out;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (!item.empty()) {
            out.push_back(scheme_from_name(item));
        }
    }
    if (out.empty()) {
        throw CLI::ValidationError("--schemes", "no schemes given");
    }
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            throw std::runtime_error("cannot open output file: " + tmp.string());
        }
        os << text;
        if (!os) {
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

struct RealizationArgs {
    std::vector<double> thetas;
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
    bool seed_given = false;
};

PhaseFading make_realization(const RealizationArgs& a) {
    if (!a.thetas.empty() && a.seed_given) {
        throw CLI::ValidationError("--thetas", "give either --thetas or --seed, not both");
    }
    if (!a.thetas.empty()) {
        if (a.thetas.size() != 4) {
            throw CLI::ValidationError("--thetas", "expected four comma separated phases");
        }
        return PhaseFading({a.thetas[0], a.thetas[1], a.thetas[2], a.thetas[3]});
    }
    if (a.seed_given) {
        return sample_phase_fading(a.seed, a.index);
    }
    throw CLI::ValidationError("rates", "need --thetas or --seed");
}

struct SchemeRecord {
    std::string scheme;
    double sum_rate = 0.0;
    PowerAlloc power;
    BandwidthAlloc bw;
    std::string diag;
};

nlohmann::json record_to_json(const SchemeRecord& r) {
    return {{"scheme", r.scheme},
            {"sum_rate_bits", r.sum_rate},
            {"power", {{"p1", r.power.p1},
                       {"p2", r.power.p2},
                       {"p_t", r.power.p_t},
                       {"p_r1", r.power.p_r1},
                       {"p_r2", r.power.p_r2}}},
            {"bandwidth", {{"b_t", r.bw.b_t}, {"b", r.bw.b}, {"b_r", r.bw.b_r}}},
            {"diag", r.diag}};
}

std::string record_to_text(const SchemeRecord& r) {
    std::ostringstream os;
    os << "scheme=" << r.scheme << " sum_rate_bits=" << format_double(r.sum_rate)
       << " p1=" << format_double(r.power.p1) << " p2=" << format_double(r.power.p2)
       << " p_t=" << format_double(r.power.p_t) << " p_r1=" << format_double(r.power.p_r1)
       << " p_r2=" << format_double(r.power.p_r2) << " b_t=" << format_double(r.bw.b_t)
       << " b=" << format_double(r.bw.b) << " b_r=" << format_double(r.bw.b_r);
    if (!r.diag.empty()) {
        os << " " << r.diag;
    }
    os << "\n";
    return os.str();
}

int run_rates(const RealizationArgs& real, double p_db, double g_db,
              BandwidthAssumption assumption, const std::string& schemes_csv,
              const RxSearchOptions& rx_opts, const TxRxOptions& txrx_opts,
              const std::string& format, const std::string& output) {
    const PhaseFading ch = make_realization(real);
    const double p = db_to_linear(p_db);
    const CoopChannel link(db_to_linear(g_db));
    const std::vector<Scheme> schemes = parse_schemes(schemes_csv);

    std::vector<SchemeRecord> records;
    std::optional<double> v_tx, v_rx, v_txrx;
    for (Scheme s : schemes) {
        SchemeRecord rec;
        rec.scheme = scheme_name(s);
        switch (s) {
            case Scheme::NC: {
                rec.sum_rate = noncoop_sum_capacity(p);
                rec.power = PowerAlloc::symmetric(p, 0.0, 0.0);
                rec.bw = BandwidthAlloc::dedicated(false, false);
                break;
            }
            case Scheme::BC: {
                rec.sum_rate = bc_sum_capacity(ch, p);
                rec.power = PowerAlloc::symmetric(p, 0.0, 0.0);
                rec.bw = BandwidthAlloc::dedicated(false, false);
                break;
            }
            case Scheme::MAC: {
                rec.sum_rate = mac_sum_capacity(ch, p);
                rec.power = PowerAlloc::symmetric(p, 0.0, 0.0);
                rec.bw = BandwidthAlloc::dedicated(false, false);
                break;
            }
            case Scheme::MIMO: {
                rec.sum_rate = mimo_capacity(ch, p);
                rec.power = PowerAlloc::symmetric(p, 0.0, 0.0);
                rec.bw = BandwidthAlloc::dedicated(false, false);
                break;
            }
            case Scheme::TX: {
                const TxCoopResult r = tx_coop_sum_rate(ch, link, p, assumption);
                rec.sum_rate = r.sum_rate;
                rec.power = PowerAlloc::symmetric(p - r.p_t_star, r.p_t_star, 0.0);
                rec.bw = r.bandwidths;
                rec.diag = std::string("branch=") +
                           (r.branch == TxBranch::ClosedFormGeneric      ? "generic"
                            : r.branch == TxBranch::ClosedFormDegenerate ? "degenerate"
                                                                         : "numeric");
                v_tx = r.sum_rate;
                break;
            }
            case Scheme::RX: {
                const RxCoopResult r = rx_coop_sum_rate(ch, link, p, assumption, rx_opts);
                rec.sum_rate = r.sum_rate;
                rec.power = r.power;
                rec.bw = r.bandwidths;
                rec.diag = "n_hat=" + format_double(r.n_hat);
                v_rx = r.sum_rate;
                break;
            }
            case Scheme::TXRX: {
                const TxRxResult r = txrx_coop_sum_rate(ch, link, p, assumption, txrx_opts);
                rec.sum_rate = r.sum_rate;
                rec.power = r.power;
                rec.bw = r.bandwidths;
                std::ostringstream ds;
                ds << "mode="
                   << (r.mode == TxRxMode::Grid       ? "grid"
                       : r.mode == TxRxMode::TxCorner ? "tx-corner"
                                                      : "rx-corner")
                   << " order=" << (r.order == EncodeOrder::R1First ? "r1-first" : "r2-first")
                   << " n_hat_1=" << format_double(r.n_hat_targets.first)
                   << " n_hat_2=" << format_double(r.n_hat_targets.second);
                rec.diag = ds.str();
                v_txrx = r.sum_rate;
                break;
            }
        }
        records.push_back(std::move(rec));
    }

    std::string text;
    if (format == "json") {
        nlohmann::json root;
        root["version"] = "1.0.0";
        root["spec"] = {{"p_db", p_db},
                        {"g_db", g_db},
                        {"assumption",
                         assumption == BandwidthAssumption::Dedicated ? "dedicated" : "shared"},
                        {"thetas", std::vector<double>(ch.theta.begin(), ch.theta.end())}};
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : records) {
            arr.push_back(record_to_json(r));
        }
        root["results"] = arr;
        text = root.dump(2) + "\n";
    } else {
        for (const auto& r : records) {
            text += record_to_text(r);
        }
    }
    write_output(text, output);

    if (v_tx && v_rx && v_txrx && *v_txrx < std::max(*v_tx, *v_rx) - 1e-6) {
        std::cerr << "self-check failed: txrx rate below max(tx, rx)\n";
        return 2;
    }
    return 0;
}

int run_bounds(const RealizationArgs& real, double p_db, const std::string& format,
               const std::string& output) {
    const PhaseFading ch = make_realization(real);
    const double p = db_to_linear(p_db);
    const BoundSet b = compute_bounds(ch, p);

    std::string text;
    if (format == "json") {
        nlohmann::json root = {{"version", "1.0.0"},
                               {"c_nc", b.c_nc},
                               {"c_bc", b.c_bc},
                               {"c_mac", b.c_mac},
                               {"c_mimo", b.c_mimo},
                               {"thetas", std::vector<double>(ch.theta.begin(), ch.theta.end())},
                               {"p_db", p_db}};
        text = root.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "c_nc=" << format_double(b.c_nc) << " c_bc=" << format_double(b.c_bc)
           << " c_mac=" << format_double(b.c_mac) << " c_mimo=" << format_double(b.c_mimo)
           << "\n";
        text = os.str();
    }
    write_output(text, output);

    const bool ok = b.c_nc <= b.c_bc + 1e-9 && std::abs(b.c_bc - b.c_mac) <= 1e-9 &&
                    b.c_mac <= b.c_mimo + 1e-9;
    if (!ok) {
        std::cerr << "self-check failed: bound ordering chain violated\n";
        return 2;
    }
    return 0;
}

int run_sweep_cmd(double p_db, const std::string& g_range, BandwidthAssumption assumption,
                  int samples, std::uint64_t seed, int workers, const std::string& schemes_csv,
                  const RxSearchOptions& rx_opts, const TxRxOptions& txrx_opts,
                  const std::string& format, const std::string& output) {
    const std::vector<double> g_db = parse_db_range(g_range);
    SweepSpec spec;
    spec.budget_p = db_to_linear(p_db);
    spec.assumption = assumption;
    spec.samples = samples;
    spec.master_seed = seed;
    spec.workers = workers;
    spec.schemes = parse_schemes(schemes_csv);
    spec.rx_options = rx_opts;
    spec.txrx_options = txrx_opts;
    for (double db : g_db) {
        spec.g_grid.push_back(db_to_linear(db));
    }

    const SweepResult result = run_sweep(spec);
    const std::string text =
        format == "json" ? sweep_to_json(result, g_db) : sweep_to_csv(result, g_db);
    write_output(text, output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coopcap: sum rates of transmitter/receiver cooperation schemes in a "
                 "two-transmitter two-receiver phase-fading network"};
    app.require_subcommand(1);
    app.set_config("--config", "", "configuration file (key = value, same names as flags)");

    RealizationArgs real;
    double p_db = 0.0;
    double g_db = 0.0;
    std::string g_range = "-10:30:2";
    std::string assumption_str = "dedicated";
    std::string schemes_csv = "nc,tx,rx,txrx,bc,mac,mimo";
    std::string format;
    std::string output;
    int samples = 1000;
    int workers = 0;
    RxSearchOptions rx_opts;
    TxRxOptions txrx_opts;
    bool rx_wide = false;

    const auto add_common = [&](CLI::App* cmd, bool with_realization) {
        cmd->add_option("--p-db", p_db, "total network power budget in dB");
        cmd->add_option("--assumption", assumption_str, "bandwidth assumption")
            ->check(CLI::IsMember({"dedicated", "shared"}));
        cmd->add_option("--output", output, "output path (default stdout)");
        if (with_realization) {
            cmd->add_option("--thetas", real.thetas, "four channel phases in radians")
                ->delimiter(',');
            cmd->add_option("--seed", real.seed, "seed for a sampled realization")
                ->envname("COOPCAP_SEED");
            cmd->add_option("--index", real.index, "realization index for --seed");
        }
    };
    const auto add_grid_overrides = [&](CLI::App* cmd) {
        cmd->add_option("--rx-grid-points", rx_opts.grid_points, "rx search grid points per axis");
        cmd->add_option("--rx-refine", rx_opts.refine_levels, "rx search refinement levels");
        cmd->add_flag("--rx-wide", rx_wide, "search asymmetric data powers for rx");
        cmd->add_option("--nhat-points", txrx_opts.n_hat_points,
                        "compression target grid points per axis");
        cmd->add_option("--nhat-refine", txrx_opts.n_hat_refine,
                        "compression target refinement levels");
        cmd->add_option("--bw-points", txrx_opts.bw_points,
                        "bandwidth simplex grid points per axis (shared)");
        cmd->add_option("--bw-refine", txrx_opts.bw_refine,
                        "bandwidth refinement levels (shared)");
    };

    CLI::App* rates = app.add_subcommand("rates", "rates of the requested schemes for one realization");
    add_common(rates, true);
    add_grid_overrides(rates);
    rates->add_option("--g-db", g_db, "cooperation channel gain in dB");
    rates->add_option("--schemes", schemes_csv, "comma separated scheme list");
    rates->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over the cooperation gain");
    add_common(sweep, false);
    add_grid_overrides(sweep);
    sweep->add_option("--g-db-range", g_range, "gain sweep lo:hi:step in dB");
    sweep->add_option("--samples", samples, "Monte Carlo samples");
    std::uint64_t sweep_seed = 0;
    sweep->add_option("--seed", sweep_seed, "master seed")->envname("COOPCAP_SEED");
    sweep->add_option("--workers", workers, "worker threads (0 = all cores)");
    sweep->add_option("--schemes", schemes_csv, "comma separated scheme list");
    sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* bounds = app.add_subcommand("bounds", "capacity bound table for one realization");
    add_common(bounds, true);
    bounds->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    real.seed_given =
        (rates->parsed() && rates->count("--seed") > 0) ||
        (bounds->parsed() && bounds->count("--seed") > 0);
    rx_opts.wide = rx_wide;
    const BandwidthAssumption assumption = assumption_str == "shared"
                                               ? BandwidthAssumption::Shared
                                               : BandwidthAssumption::Dedicated;
    try {
        if (rates->parsed()) {
            return run_rates(real, p_db, g_db, assumption, schemes_csv, rx_opts, txrx_opts,
                             format.empty() ? "text" : format, output);
        }
        if (sweep->parsed()) {
            return run_sweep_cmd(p_db, g_range, assumption, samples, sweep_seed, workers,
                                 schemes_csv, rx_opts, txrx_opts,
                                 format.empty() ? "csv" : format, output);
        }
        if (bounds->parsed()) {
            return run_bounds(real, p_db, format.empty() ? "text" : format, output);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
