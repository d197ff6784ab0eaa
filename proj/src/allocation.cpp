// SPDX-License-Identifier: Apache-2.0

#include "coopcap/allocation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coopcap {

BandwidthAlloc BandwidthAlloc::dedicated(bool tx_active, bool rx_active) {
    BandwidthAlloc a;
    a.assumption = BandwidthAssumption::Dedicated;
    a.b_t = tx_active ? 1.0 : 0.0;
    a.b = 1.0;
    a.b_r = rx_active ? 1.0 : 0.0;
    return a;
}

BandwidthAlloc BandwidthAlloc::shared(double b_t, double b, double b_r) {
    BandwidthAlloc a;
    a.assumption = BandwidthAssumption::Shared;
    a.b_t = b_t;
    a.b = b;
    a.b_r = b_r;
    a.validate();
    return a;
}

void BandwidthAlloc::validate() const {
    if (!(b_t >= 0.0 && b >= 0.0 && b_r >= 0.0)) {
        throw std::domain_error("BandwidthAlloc: negative bandwidth");
    }
    if (assumption == BandwidthAssumption::Dedicated) {
        const bool t_ok = b_t == 0.0 || b_t == 1.0;
        const bool r_ok = b_r == 0.0 || b_r == 1.0;
        if (!t_ok || !r_ok || b != 1.0) {
            throw std::domain_error("BandwidthAlloc: dedicated bands must be exactly 0 or 1 Hz");
        }
    } else {
        if (std::abs(b_t + b + b_r - 1.0) > 1e-12) {
            throw std::domain_error("BandwidthAlloc: shared bands must sum to 1 Hz");
        }
    }
}

PowerAlloc PowerAlloc::data_only(double p1, double p2) { return {p1, p2, 0.0, 0.0, 0.0}; }

PowerAlloc PowerAlloc::symmetric(double p_data, double p_t, double p_r) {
    return {0.5 * p_data, 0.5 * p_data, p_t, 0.5 * p_r, 0.5 * p_r};
}

void PowerAlloc::validate(double budget) const {
    if (!(p1 >= 0.0 && p2 >= 0.0 && p_t >= 0.0 && p_r1 >= 0.0 && p_r2 >= 0.0)) {
        throw std::domain_error("PowerAlloc: negative power");
    }
    if (total() > budget + 1e-9) {
        throw std::domain_error("PowerAlloc: total exceeds budget");
    }
}

double awgn_rate(double bandwidth, double snr_power, double gain) {
    if (!(bandwidth >= 0.0 && snr_power >= 0.0 && gain >= 0.0)) {
        throw std::domain_error("awgn_rate: negative argument");
    }
    if (bandwidth == 0.0) {
        return 0.0;
    }
    return bandwidth * std::log1p(gain * snr_power / bandwidth) / std::numbers::ln2;
}

}  // namespace coopcap
