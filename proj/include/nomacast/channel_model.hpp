/*
   Copyright 2026 The nomacast Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomacast/rng.hpp"

namespace nomacast {

using Complex = std::complex<double>;

/// Raised when an MRT beamformer is requested toward an all-zero channel.
class DegenerateChannelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// K x M complex channel realization; row k is user k's channel vector.
class ChannelMatrix {
public:
    ChannelMatrix(std::size_t users, std::size_t antennas, std::vector<Complex> entries);

    std::size_t users() const { return users_; }
    std::size_t antennas() const { return antennas_; }

    std::span<const Complex> row(std::size_t user) const;
    double squared_norm(std::size_t user) const;

private:
    std::size_t users_;
    std::size_t antennas_;
    std::vector<Complex> entries_;
};

enum class BeamformerKind { Mrt, EqualGain, Random };

struct Beamformer {
    std::vector<Complex> weights;
    BeamformerKind kind = BeamformerKind::Mrt;
    std::size_t matched_user = 0; ///< MRT only
};

/// Scalar gains |h_k w|^2 seen through one beamformer.
///
/// `z1` belongs to the unicast user; `others` holds the remaining K-1 users
/// in their original order, and `u`/`v` are the min/max of `others`.
struct EffectiveGains {
    double z1 = 0.0;
    std::vector<double> others;
    double u = 0.0;
    double v = 0.0;

    /// Validates the gains and fills in u and v.
    static EffectiveGains from(double z1, std::vector<double> others);

    /// min(z1, u): the gain that limits multicast reception.
    double weakest() const { return z1 < u ? z1 : u; }
};

/// i.i.d. CN(0, 1) entries: real and imaginary parts each have variance 1/2.
ChannelMatrix sample_channel(std::size_t users, std::size_t antennas, RandomStream& rng);
ChannelMatrix sample_channel(std::size_t users, std::size_t antennas, RngStream stream);

/// MRT toward `unicast_index`, equal gain, or an isotropic random unit vector.
/// Only the Random kind consumes draws from `rng`.
Beamformer make_beamformer(const ChannelMatrix& channel, std::size_t unicast_index,
                           BeamformerKind kind, RandomStream& rng);

EffectiveGains effective_gains(const ChannelMatrix& channel, const Beamformer& beamformer,
                               std::size_t unicast_index);

/// Draws the gains of the MRT-toward-user-0 configuration directly:
/// z1 ~ Gamma(M, 1), others i.i.d. Exp(1). Not valid with scheduling.
EffectiveGains sample_gains_direct(std::size_t users, std::size_t antennas, RandomStream& rng);

/// Index of the largest squared channel norm; ties go to the lowest index.
std::size_t select_unicast_user(const ChannelMatrix& channel);

BeamformerKind parse_beamformer_kind(const std::string& text);
std::string to_string(BeamformerKind kind);

} // namespace nomacast
