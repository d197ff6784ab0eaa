// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>
#include <random>

#include "coopcap/channel.hpp"
#include "coopcap/linalg.hpp"

namespace coopcap::testing {

inline PhaseFading random_fading(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    return PhaseFading({u(rng), u(rng), u(rng), u(rng)});
}

inline cxd random_cxd(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

inline Complex2x2 random_matrix(std::mt19937_64& rng, double scale = 1.0) {
    return {random_cxd(rng, scale), random_cxd(rng, scale), random_cxd(rng, scale),
            random_cxd(rng, scale)};
}

// Random PSD matrix A A^H with O(scale^2) entries.
inline Hermitian2x2 random_psd(std::mt19937_64& rng, double scale = 1.0) {
    return congruence(random_matrix(rng, scale), Hermitian2x2::scaled_identity(1.0));
}

}  // namespace coopcap::testing
