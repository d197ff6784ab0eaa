// SPDX-License-Identifier: Apache-2.0
//
// Power and bandwidth allocation types shared by every scheme, plus the
// single AWGN rate expression both cooperation links are built on.

#pragma once

namespace coopcap {

enum class BandwidthAssumption { Dedicated, Shared };

/// (b_t, b, b_r) in Hz. Dedicated: each active channel gets exactly 1 Hz and
/// inactive cooperation channels get 0. Shared: the three bands partition a
/// single 1 Hz channel.
struct BandwidthAlloc {
    BandwidthAssumption assumption{BandwidthAssumption::Dedicated};
    double b_t{1.0};
    double b{1.0};
    double b_r{1.0};

    static BandwidthAlloc dedicated(bool tx_active, bool rx_active);
    static BandwidthAlloc shared(double b_t, double b, double b_r);

    void validate() const;
};

/// Transmit powers in W under a common network budget P.
struct PowerAlloc {
    double p1{}, p2{}, p_t{}, p_r1{}, p_r2{};

    static PowerAlloc data_only(double p1, double p2);
    /// Symmetric splits: data power divided equally, receiver power divided equally.
    static PowerAlloc symmetric(double p_data, double p_t, double p_r);

    double total() const { return p1 + p2 + p_t + p_r1 + p_r2; }
    void validate(double budget) const;
};

/// b * log2(1 + gain * p / b), with the b -> 0 continuous limit of 0 so the
/// allocation optimizers may explore boundary bandwidths.
double awgn_rate(double bandwidth, double snr_power, double gain);

}  // namespace coopcap
