// SPDX-License-Identifier: Apache-2.0

#include "coopcap/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace coopcap {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string sweep_to_csv(const SweepResult& result, const std::vector<double>& g_db_labels) {
    if (g_db_labels.size() != result.spec.g_grid.size()) {
        throw std::invalid_argument("sweep_to_csv: label count mismatch");
    }
    std::ostringstream os;
    os << "g_db,scheme,mean_rate_bits,stderr,samples,seed\n";
    for (std::size_t gi = 0; gi < g_db_labels.size(); ++gi) {
        for (std::size_t si = 0; si < result.spec.schemes.size(); ++si) {
            const SweepCell& c = result.cells[si][gi];
            os << format_double(g_db_labels[gi]) << ',' << scheme_name(result.spec.schemes[si])
               << ',' << format_double(c.mean) << ',' << format_double(c.stderr_of_mean) << ','
               << c.samples_used << ',' << result.spec.master_seed << '\n';
        }
    }
    return os.str();
}

std::vector<SweepCsvRow> parse_sweep_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "g_db,scheme,mean_rate_bits,stderr,samples,seed") {
        throw std::runtime_error("parse_sweep_csv: bad header");
    }
    std::vector<SweepCsvRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        SweepCsvRow row;
        std::string field;
        std::getline(ls, field, ',');
        row.g_db = std::stod(field);
        std::getline(ls, row.scheme, ',');
        std::getline(ls, field, ',');
        row.mean_rate_bits = std::stod(field);
        std::getline(ls, field, ',');
        row.stderr_of_mean = std::stod(field);
        std::getline(ls, field, ',');
        row.samples = std::stol(field);
        std::getline(ls, field, ',');
        row.seed = std::stoull(field);
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_to_json(const SweepResult& result, const std::vector<double>& g_db_labels) {
    if (g_db_labels.size() != result.spec.g_grid.size()) {
        throw std::invalid_argument("sweep_to_json: label count mismatch");
    }
    nlohmann::json spec;
    spec["p"] = result.spec.budget_p;
    spec["assumption"] =
        result.spec.assumption == BandwidthAssumption::Dedicated ? "dedicated" : "shared";
    spec["samples"] = result.spec.samples;
    spec["seed"] = result.spec.master_seed;
    spec["g_db"] = g_db_labels;
    spec["g_linear"] = result.spec.g_grid;
    {
        std::vector<std::string> names;
        for (Scheme s : result.spec.schemes) {
            names.emplace_back(scheme_name(s));
        }
        spec["schemes"] = names;
    }

    nlohmann::json results = nlohmann::json::array();
    for (std::size_t gi = 0; gi < g_db_labels.size(); ++gi) {
        for (std::size_t si = 0; si < result.spec.schemes.size(); ++si) {
            const SweepCell& c = result.cells[si][gi];
            results.push_back({{"g_db", g_db_labels[gi]},
                               {"scheme", scheme_name(result.spec.schemes[si])},
                               {"mean_rate_bits", c.mean},
                               {"stderr", c.stderr_of_mean},
                               {"samples", c.samples_used}});
        }
    }

    nlohmann::json root;
    root["version"] = "1.0.0";
    root["spec"] = spec;
    root["results"] = results;
    root["failures"] = result.failures;
    root["wall_seconds"] = result.wall_seconds;
    root["realization_digest"] = result.realization_digest;
    return root.dump(2) + "\n";
}

}  // namespace coopcap
