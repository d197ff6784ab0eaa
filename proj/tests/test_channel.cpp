// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "coopcap/channel.hpp"

using namespace coopcap;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_SUITE("channel") {

TEST_CASE("sampling is a pure function of (seed, index)") {
    const PhaseFading a = sample_phase_fading(42, 1000);
    const PhaseFading b = sample_phase_fading(42, 1000);
    CHECK(a.theta == b.theta);
    const PhaseFading c = sample_phase_fading(42, 1001);
    CHECK(a.theta != c.theta);
    const PhaseFading d = sample_phase_fading(43, 1000);
    CHECK(a.theta != d.theta);
}

TEST_CASE("empirical mean of phi is 1") {
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        sum += sample_phase_fading(7, static_cast<std::uint64_t>(i)).phi();
    }
    CHECK(std::abs(sum / n - 1.0) < 0.01);
}

TEST_CASE("theta1 histogram is uniform (chi-square at the 0.01 level)") {
    constexpr int bins = 16;
    constexpr int n = 100000;
    std::array<int, bins> count{};
    for (int i = 0; i < n; ++i) {
        const double t = sample_phase_fading(3, static_cast<std::uint64_t>(i)).theta[0];
        const int b = std::min(bins - 1, static_cast<int>(t / (2.0 * pi) * bins));
        ++count[static_cast<std::size_t>(b)];
    }
    const double expected = static_cast<double>(n) / bins;
    double chi2 = 0.0;
    for (int c : count) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    CHECK(chi2 < 30.578);  // chi-square 0.99 quantile, 15 degrees of freedom
}

TEST_CASE("phi closed-form values") {
    CHECK(PhaseFading({0, 0, 0, 0}).phi() == 0.0);
    CHECK(std::abs(PhaseFading({pi, 0, 0, 0}).phi() - 2.0) < 1e-15);
    CHECK(std::abs(PhaseFading({pi / 2, 0, 0, 0}).phi() - 1.0) < 1e-15);
}

TEST_CASE("gains have unit magnitude and phi is shift invariant") {
    for (std::uint64_t i = 0; i < 2000; ++i) {
        const PhaseFading ch = sample_phase_fading(11, i);
        for (int k = 0; k < 4; ++k) {
            CHECK(std::abs(std::abs(ch.h(k)) - 1.0) < 1e-15);
        }
        const double shift = 0.3 + 0.001 * static_cast<double>(i);
        const PhaseFading shifted({ch.theta[0] + shift, ch.theta[1] + shift,
                                   ch.theta[2] + shift, ch.theta[3] + shift});
        CHECK(std::abs(shifted.phi() - ch.phi()) < 1e-12);
        CHECK(ch.phi() >= 0.0);
        CHECK(ch.phi() <= 2.0);
    }
}

TEST_CASE("degraded matrices") {
    const PhaseFading ch = sample_phase_fading(5, 0);
    {
        const auto [h1, h2] = degraded_matrices(ch, 1.0, 1.0);
        const Complex2x2 h = ch.matrix();
        CHECK(h1.e00 == h.e00);
        CHECK(h1.e11 == h.e11);
        CHECK(h2.e00 == h.e00);
        CHECK(h2.e10 == h.e10);
    }
    {
        const auto [h1, h2] = degraded_matrices(ch, 0.0, 0.0);
        CHECK(h1.e10 == cxd{0.0});
        CHECK(h1.e11 == cxd{0.0});
        CHECK(h2.e00 == cxd{0.0});
        CHECK(h2.e01 == cxd{0.0});
    }
    {
        const auto [h1, h2] = degraded_matrices(ch, 1.0, 0.25);
        (void)h2;
        CHECK(std::abs(h1.e10 - 0.5 * ch.h(2)) < 1e-15);
        CHECK(std::abs(h1.e11 - 0.5 * ch.h(3)) < 1e-15);
    }
    CHECK_THROWS_AS(degraded_matrices(ch, -0.1, 0.5), std::domain_error);
    CHECK_THROWS_AS(degraded_matrices(ch, 0.5, 1.1), std::domain_error);
}

TEST_CASE("constructor wraps phases into [0, 2*pi)") {
    const PhaseFading ch({-pi, 3.0 * pi, 7.0, 0.0});
    for (double t : ch.theta) {
        CHECK(t >= 0.0);
        CHECK(t < 2.0 * pi);
    }
    CHECK(std::abs(ch.theta[0] - pi) < 1e-12);
    CHECK(std::abs(ch.theta[1] - pi) < 1e-12);
}

TEST_CASE("coop channel validates its gain") {
    CHECK(CoopChannel(0.0).gain == 0.0);
    CHECK_THROWS_AS(CoopChannel(-1.0), std::domain_error);
}

}  // TEST_SUITE
