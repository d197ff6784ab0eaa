// SPDX-License-Identifier: Apache-2.0
//
// Phase-fading channel realization and everything derived from it. Phases are
// the ground truth; unit-modulus gains are recomputed on demand so they never
// drift. Sampling is counter based: a (seed, index) pair always produces the
// same realization no matter the call order or thread.

#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "coopcap/linalg.hpp"

namespace coopcap {

struct PhaseFading {
    std::array<double, 4> theta{};  // radians, wrapped into [0, 2*pi)

    PhaseFading() = default;
    explicit PhaseFading(const std::array<double, 4>& t);

    /// Channel gain h_i = exp(j theta_i), i in 0..3.
    cxd h(int i) const;

    std::array<cxd, 2> row1() const { return {h(0), h(1)}; }  // receiver 1's row of H
    std::array<cxd, 2> row2() const { return {h(2), h(3)}; }  // receiver 2's row of H
    std::array<cxd, 2> col1() const { return {h(0), h(2)}; }  // transmitter 1's column
    std::array<cxd, 2> col2() const { return {h(1), h(3)}; }  // transmitter 2's column

    Complex2x2 matrix() const { return Complex2x2::from_rows(row1(), row2()); }

    /// phi = 1 - cos(theta0 - theta1 - theta2 + theta3), in [0, 2].
    double phi() const;
};

/// Draw one realization with four i.i.d. uniform phases on [0, 2*pi).
PhaseFading sample_phase_fading(std::uint64_t seed, std::uint64_t index);

/// Full-duplex AWGN cooperation link with linear power gain G (same gain for
/// the transmitter-side and receiver-side links).
struct CoopChannel {
    double gain{};

    CoopChannel() = default;
    explicit CoopChannel(double g);
};

/// Effective receive matrices once each receiver holds a compressed copy of
/// the other's observation. The forwarded row is scaled by sqrt(eta): first
/// matrix has rows (f1, sqrt(eta2) f2), second (sqrt(eta1) f1, f2).
std::pair<Complex2x2, Complex2x2> degraded_matrices(const PhaseFading& ch, double eta1,
                                                    double eta2);

}  // namespace coopcap
