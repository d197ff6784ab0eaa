// SPDX-License-Identifier: Apache-2.0

#include "coopcap/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coopcap {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_phase(double t) {
    if (!std::isfinite(t)) {
        throw std::domain_error("PhaseFading: non-finite phase");
    }
    double w = std::fmod(t, two_pi);
    if (w < 0.0) {
        w += two_pi;
    }
    return (w >= two_pi) ? 0.0 : w;
}

// SplitMix64 finalizer; counter-based access gives random draws addressable
// by (seed, counter) without any sequential state.
std::uint64_t fmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t counter) {
    constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
    const std::uint64_t x = fmix64((seed ^ 0x5851f42d4c957f2dULL) + (counter + 1) * golden);
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace

PhaseFading::PhaseFading(const std::array<double, 4>& t) {
    for (int i = 0; i < 4; ++i) {
        theta[static_cast<std::size_t>(i)] = wrap_phase(t[static_cast<std::size_t>(i)]);
    }
}

cxd PhaseFading::h(int i) const {
    const double t = theta[static_cast<std::size_t>(i)];
    return {std::cos(t), std::sin(t)};
}

double PhaseFading::phi() const { return 1.0 - std::cos(theta[0] - theta[1] - theta[2] + theta[3]); }

PhaseFading sample_phase_fading(std::uint64_t seed, std::uint64_t index) {
    PhaseFading ch;
    for (std::uint64_t k = 0; k < 4; ++k) {
        ch.theta[k] = two_pi * uniform01(seed, index * 4 + k);
    }
    return ch;
}

CoopChannel::CoopChannel(double g) : gain(g) {
    if (!(g >= 0.0) || !std::isfinite(g)) {
        throw std::domain_error("CoopChannel: gain must be finite and >= 0");
    }
}

std::pair<Complex2x2, Complex2x2> degraded_matrices(const PhaseFading& ch, double eta1,
                                                    double eta2) {
    if (!(eta1 >= 0.0 && eta1 <= 1.0) || !(eta2 >= 0.0 && eta2 <= 1.0)) {
        throw std::domain_error("degraded_matrices: eta outside [0, 1]");
    }
    const double s1 = std::sqrt(eta1);
    const double s2 = std::sqrt(eta2);
    const auto f1 = ch.row1();
    const auto f2 = ch.row2();
    const Complex2x2 h1 = Complex2x2::from_rows(f1, {s2 * f2[0], s2 * f2[1]});
    const Complex2x2 h2 = Complex2x2::from_rows({s1 * f1[0], s1 * f1[1]}, f2);
    return {h1, h2};
}

}  // namespace coopcap
