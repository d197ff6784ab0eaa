// SPDX-License-Identifier: Apache-2.0

#include "coopcap/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coopcap/linalg.hpp"

namespace coopcap {

namespace {

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

void check_budget(double p) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
        throw std::domain_error("capacity bound: budget must be finite and >= 0");
    }
}

}  // namespace

double noncoop_sum_capacity(double budget_p) {
    check_budget(budget_p);
    return log2_1p(budget_p);
}

double bc_sum_capacity(const PhaseFading& ch, double budget_p) {
    check_budget(budget_p);
    const double p = budget_p;
    return log2_1p(2.0 * p + 0.5 * ch.phi() * p * p);
}

double mac_sum_capacity(const PhaseFading& ch, double budget_p) {
    check_budget(budget_p);
    const double half = 0.5 * budget_p;
    const Hermitian2x2 m = rank_one(ch.col1(), half) + rank_one(ch.col2(), half);
    return logdet_i_plus(m);
}

double mimo_capacity(const PhaseFading& ch, double budget_p) {
    check_budget(budget_p);
    const Hermitian2x2 gram = congruence(ch.matrix(), Hermitian2x2::scaled_identity(1.0));
    const auto [lam1, lam2] = eig_hermitian(gram);
    if (lam1 <= 1e-12) {
        throw std::domain_error("mimo_capacity: degenerate channel, largest eigenvalue ~ 0");
    }
    const double p = budget_p;
    if (lam2 <= 1e-12 || p <= 1.0 / lam2 - 1.0 / lam1) {
        return log2_1p(lam1 * p);  // single active mode
    }
    const double level = 0.5 * (p + 1.0 / lam1 + 1.0 / lam2);
    const double p1 = level - 1.0 / lam1;
    const double p2 = level - 1.0 / lam2;
    return log2_1p(lam1 * p1) + log2_1p(lam2 * p2);
}

BoundSet compute_bounds(const PhaseFading& ch, double budget_p) {
    return {noncoop_sum_capacity(budget_p), bc_sum_capacity(ch, budget_p),
            mac_sum_capacity(ch, budget_p), mimo_capacity(ch, budget_p)};
}

}  // namespace coopcap
