// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "coopcap/bounds.hpp"
#include "coopcap/optimize.hpp"
#include "coopcap/tx_coop.hpp"
#include "helpers.hpp"

using namespace coopcap;

namespace {

constexpr double pi = std::numbers::pi;

// Log-det route for the DPC sum rate, independent of the closed form.
double dpc_logdet(const PhaseFading& ch, double p1, double p2, double b) {
    const Hermitian2x2 m = rank_one({std::conj(ch.h(0)), std::conj(ch.h(1))}, p1 / b) +
                           rank_one({std::conj(ch.h(2)), std::conj(ch.h(3))}, p2 / b);
    return b * logdet_i_plus(m);
}

double crossing_value(const PhaseFading& ch, const CoopChannel& g, double p, double p_t) {
    const double data = 0.5 * (p - p_t);
    return std::min(exchange_rate(g, p_t, 1.0), dpc_sum_rate(ch, data, data, 1.0));
}

double bisection_pt_oracle(const PhaseFading& ch, const CoopChannel& g, double p) {
    const auto diff = [&](double p_t) {
        const double data = 0.5 * (p - p_t);
        return exchange_rate(g, p_t, 1.0) - dpc_sum_rate(ch, data, data, 1.0);
    };
    return bisect_root(diff, 0.0, p, 1e-12 * p).arg[0];
}

}  // namespace

TEST_SUITE("tx_coop") {

TEST_CASE("dpc_sum_rate closed-form values") {
    CHECK(std::abs(dpc_sum_rate(PhaseFading({0, 0, 0, 0}), 0.5, 0.5, 1.0) - std::log2(3.0)) <
          1e-12);
    CHECK(std::abs(dpc_sum_rate(PhaseFading({pi, 0, 0, 0}), 0.5, 0.5, 1.0) - 2.0) < 1e-12);
}

TEST_CASE("dpc_sum_rate matches the log-det route") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> up(0.0, 5.0);
    std::uniform_real_distribution<double> ub(0.1, 2.0);
    for (int i = 0; i < 10000; ++i) {
        const PhaseFading ch = testing::random_fading(rng);
        const double p1 = up(rng), p2 = up(rng), b = ub(rng);
        CHECK(std::abs(dpc_sum_rate(ch, p1, p2, b) - dpc_logdet(ch, p1, p2, b)) < 1e-10);
    }
}

TEST_CASE("exchange_rate values") {
    CHECK(std::abs(exchange_rate(CoopChannel(1.0), 2.0, 1.0) - 2.0) < 1e-15);
    CHECK(exchange_rate(CoopChannel(5.0), 0.0, 1.0) == 0.0);
    CHECK(std::abs(exchange_rate(CoopChannel(100.0), 1.0, 0.5) - std::log2(101.0)) < 1e-12);
}

TEST_CASE("dedicated exchange power closed form") {
    std::mt19937_64 rng(32);
    {
        // enormous gain: the crossing collapses toward zero cooperation power
        const PhaseFading ch = testing::random_fading(rng);
        const PtStar s = exchange_power_star_dedicated(ch, CoopChannel(1e6), 1.0);
        CHECK(s.value < 1e-4);
        CHECK(s.branch == TxBranch::ClosedFormGeneric);
    }
    {
        // exact degeneracy G^2 = 2 phi with phi = 2, G = 2, P = 1
        const PhaseFading ch({pi, 0, 0, 0});
        const PtStar s = exchange_power_star_dedicated(ch, CoopChannel(2.0), 1.0);
        CHECK(s.branch == TxBranch::ClosedFormDegenerate);
        CHECK(std::abs(s.value - 0.5) < 1e-12);
    }
}

TEST_CASE("dedicated closed form agrees with the bisection oracle") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> ug(-1.0, 3.0);  // log10 G
    std::uniform_real_distribution<double> up(0.1, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const PhaseFading ch = testing::random_fading(rng);
        const CoopChannel g(std::pow(10.0, ug(rng)));
        const double p = up(rng);
        const PtStar s = exchange_power_star_dedicated(ch, g, p);
        const double oracle = bisection_pt_oracle(ch, g, p);
        const double v_closed = crossing_value(ch, g, p, s.value);
        const double v_oracle = crossing_value(ch, g, p, oracle);
        CHECK(std::abs(v_closed - v_oracle) < 1e-6);
        // interior crossing balances the two branches
        if (s.value > 1e-9 && s.value < p - 1e-9) {
            const double data = 0.5 * (p - s.value);
            CHECK(std::abs(exchange_rate(g, s.value, 1.0) - dpc_sum_rate(ch, data, data, 1.0)) <
                  1e-6);
        }
    }
}

TEST_CASE("shared exchange power") {
    const PhaseFading ch({pi / 2, 0, 0, 0});  // phi = 1
    CHECK(exchange_power_star_shared(ch, CoopChannel(0.0), 1.0, 0.5, 0.5) == 0.0);
    {
        const CoopChannel g(100.0);
        const double p = 1.0;
        const double star = exchange_power_star_shared(ch, g, p, 0.5, 0.5);
        // fine-grid scan of the crossing
        const auto diff = [&](double p_t) {
            const double data = 0.5 * (p - p_t);
            return exchange_rate(g, p_t, 0.5) - dpc_sum_rate(ch, data, data, 0.5);
        };
        double oracle = p;
        const int n = 1000000;
        for (int i = 0; i + 1 < n; ++i) {
            const double a = p * i / (n - 1.0);
            const double b = p * (i + 1) / (n - 1.0);
            if (diff(a) <= 0.0 && diff(b) > 0.0) {
                oracle = 0.5 * (a + b);
                break;
            }
        }
        CHECK(std::abs(star - oracle) < 1e-5);
    }
}

TEST_CASE("tx sum rate limits") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 20; ++i) {
        const PhaseFading ch = testing::random_fading(rng);
        // large gain approaches the colocated-transmitter bound from below
        const TxCoopResult big =
            tx_coop_sum_rate(ch, CoopChannel(1e8), 1.0, BandwidthAssumption::Dedicated);
        const double bc = bc_sum_capacity(ch, 1.0);
        CHECK(big.sum_rate <= bc + 1e-9);
        CHECK(big.sum_rate > bc - 1e-3);
        // no cooperation channel, no rate
        const TxCoopResult zero =
            tx_coop_sum_rate(ch, CoopChannel(0.0), 1.0, BandwidthAssumption::Dedicated);
        CHECK(zero.sum_rate == 0.0);
    }
}

TEST_CASE("tx sum rate end-to-end against the bisection oracle") {
    const PhaseFading ch({pi / 2, 0, 0, 0});  // phi = 1
    const CoopChannel g(10.0);
    const TxCoopResult r = tx_coop_sum_rate(ch, g, 1.0, BandwidthAssumption::Dedicated);
    const double oracle_pt = bisection_pt_oracle(ch, g, 1.0);
    CHECK(std::abs(r.sum_rate - crossing_value(ch, g, 1.0, oracle_pt)) < 1e-6);
}

TEST_CASE("dpc_sum_rate is symmetric and concave on the power simplex") {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> up(0.0, 4.0);
    for (int i = 0; i < 2000; ++i) {
        const PhaseFading ch = testing::random_fading(rng);
        const double p1 = up(rng), p2 = up(rng);
        CHECK(dpc_sum_rate(ch, p1, p2, 1.0) == dpc_sum_rate(ch, p2, p1, 1.0));
        const double mid = dpc_sum_rate(ch, 0.5 * (p1 + p2), 0.5 * (p1 + p2), 1.0);
        const double avg = 0.5 * (dpc_sum_rate(ch, p1, p2, 1.0) + dpc_sum_rate(ch, p2, p1, 1.0));
        CHECK(mid >= avg - 1e-12);
    }
}

TEST_CASE("tx sum rate is monotone in gain and budget, dominated by dedicated and bc") {
    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> ug(-1.0, 3.0);
    std::uniform_real_distribution<double> up(0.1, 10.0);
    for (int i = 0; i < 300; ++i) {
        const PhaseFading ch = testing::random_fading(rng);
        const double gain = std::pow(10.0, ug(rng));
        const double p = up(rng);
        const TxCoopResult base =
            tx_coop_sum_rate(ch, CoopChannel(gain), p, BandwidthAssumption::Dedicated);
        const TxCoopResult more_g =
            tx_coop_sum_rate(ch, CoopChannel(gain * 1.25), p, BandwidthAssumption::Dedicated);
        const TxCoopResult more_p =
            tx_coop_sum_rate(ch, CoopChannel(gain), p * 1.1, BandwidthAssumption::Dedicated);
        CHECK(more_g.sum_rate >= base.sum_rate - 1e-9);
        CHECK(more_p.sum_rate >= base.sum_rate - 1e-9);
        CHECK(base.sum_rate <= bc_sum_capacity(ch, p) + 1e-9);

        const TxCoopResult sh =
            tx_coop_sum_rate(ch, CoopChannel(gain), p, BandwidthAssumption::Shared);
        CHECK(base.sum_rate >= sh.sum_rate - 1e-9);
        CHECK(sh.bandwidths.b_t + sh.bandwidths.b + sh.bandwidths.b_r == doctest::Approx(1.0));
    }
}

}  // TEST_SUITE
