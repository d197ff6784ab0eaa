// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "coopcap/allocation.hpp"

using namespace coopcap;

TEST_SUITE("allocation") {

TEST_CASE("awgn_rate closed-form values") {
    CHECK(awgn_rate(1.0, 1.0, 1.0) == 1.0);
    CHECK(awgn_rate(0.0, 5.0, 10.0) == 0.0);
    // 0.5 * log2(7), frozen from high-precision evaluation
    CHECK(std::abs(awgn_rate(0.5, 1.0, 3.0) - 1.403677461028802) < 1e-12);
    CHECK_THROWS_AS(awgn_rate(-1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("awgn_rate is monotone in power and gain, concave in power") {
    for (double b : {0.2, 1.0, 3.0}) {
        double prev = -1.0;
        for (double p : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
            const double r = awgn_rate(b, p, 2.0);
            CHECK(r >= prev);
            prev = r;
        }
        prev = -1.0;
        for (double g : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
            const double r = awgn_rate(b, 3.0, g);
            CHECK(r >= prev);
            prev = r;
        }
        for (double p : {0.5, 1.0, 2.0, 4.0}) {
            const double mid = awgn_rate(b, p, 1.0);
            const double avg = 0.5 * (awgn_rate(b, 0.5 * p, 1.0) + awgn_rate(b, 1.5 * p, 1.0));
            CHECK(mid >= avg - 1e-12);
        }
    }
}

TEST_CASE("awgn_rate vanishes with the bandwidth") {
    for (double pg : {0.1, 1.0, 100.0, 1000.0}) {
        CHECK(awgn_rate(1e-9, pg, 1.0) < 1e-6);
    }
}

TEST_CASE("bandwidth allocation invariants") {
    const BandwidthAlloc d = BandwidthAlloc::dedicated(true, false);
    CHECK(d.b_t == 1.0);
    CHECK(d.b == 1.0);
    CHECK(d.b_r == 0.0);
    d.validate();

    const BandwidthAlloc s = BandwidthAlloc::shared(0.25, 0.5, 0.25);
    s.validate();
    CHECK_THROWS_AS(BandwidthAlloc::shared(0.5, 0.5, 0.5), std::domain_error);
    CHECK_THROWS_AS(BandwidthAlloc::shared(-0.1, 1.1, 0.0), std::domain_error);

    BandwidthAlloc bad = d;
    bad.b_t = 0.5;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("power allocation invariants") {
    const PowerAlloc p = PowerAlloc::symmetric(0.6, 0.2, 0.2);
    CHECK(p.p1 == 0.3);
    CHECK(p.p_r1 == 0.1);
    CHECK(std::abs(p.total() - 1.0) < 1e-15);
    p.validate(1.0);
    p.validate(1.0 - 5e-10);  // budget tolerance
    CHECK_THROWS_AS(p.validate(0.9), std::domain_error);
    const PowerAlloc negative{-0.1, 0.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(negative.validate(1.0), std::domain_error);
}

}  // TEST_SUITE
