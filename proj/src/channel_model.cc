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

#include "nomacast/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nomacast {

namespace {

Complex complex_normal(RandomStream& rng)
{
    // |h|^2 ~ Exp(1) with a uniform phase is exactly CN(0, 1).
    const double magnitude = std::sqrt(rng.exponential());
    const double phase = 2.0 * std::numbers::pi * rng.uniform();
    return std::polar(magnitude, phase);
}

void check_dimensions(std::size_t users, std::size_t antennas)
{
    if (users < 2) {
        throw std::invalid_argument("channel needs at least 2 users, got " + std::to_string(users));
    }
    if (antennas < 1) {
        throw std::invalid_argument("channel needs at least 1 antenna");
    }
}

double vector_norm(std::span<const Complex> x)
{
    double sum = 0.0;
    for (const auto& c : x) {
        sum += std::norm(c);
    }
    return std::sqrt(sum);
}

} // namespace

ChannelMatrix::ChannelMatrix(std::size_t users, std::size_t antennas, std::vector<Complex> entries)
    : users_(users), antennas_(antennas), entries_(std::move(entries))
{
    check_dimensions(users, antennas);
    if (entries_.size() != users * antennas) {
        throw std::invalid_argument("channel entry count does not match K x M");
    }
    for (const auto& c : entries_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("channel entries must be finite");
        }
    }
}

std::span<const Complex> ChannelMatrix::row(std::size_t user) const
{
    if (user >= users_) {
        throw std::out_of_range("user index out of range");
    }
    return {entries_.data() + user * antennas_, antennas_};
}

double ChannelMatrix::squared_norm(std::size_t user) const
{
    double sum = 0.0;
    for (const auto& c : row(user)) {
        sum += std::norm(c);
    }
    return sum;
}

EffectiveGains EffectiveGains::from(double z1, std::vector<double> others)
{
    if (others.empty()) {
        throw std::invalid_argument("effective gains need at least one non-unicast user");
    }
    auto valid = [](double z) { return std::isfinite(z) && z >= 0.0; };
    if (!valid(z1) || !std::all_of(others.begin(), others.end(), valid)) {
        throw std::invalid_argument("effective gains must be finite and nonnegative");
    }
    const auto [lo, hi] = std::minmax_element(others.begin(), others.end());
    EffectiveGains g;
    g.z1 = z1;
    g.u = *lo;
    g.v = *hi;
    g.others = std::move(others);
    return g;
}

ChannelMatrix sample_channel(std::size_t users, std::size_t antennas, RandomStream& rng)
{
    check_dimensions(users, antennas);
    std::vector<Complex> entries(users * antennas);
    for (auto& c : entries) {
        c = complex_normal(rng);
    }
    return ChannelMatrix(users, antennas, std::move(entries));
}

ChannelMatrix sample_channel(std::size_t users, std::size_t antennas, RngStream stream)
{
    RandomStream rng(stream);
    return sample_channel(users, antennas, rng);
}

Beamformer make_beamformer(const ChannelMatrix& channel, std::size_t unicast_index,
                           BeamformerKind kind, RandomStream& rng)
{
    const std::size_t m = channel.antennas();
    Beamformer bf;
    bf.kind = kind;
    bf.weights.resize(m);
    switch (kind) {
    case BeamformerKind::Mrt: {
        const auto h = channel.row(unicast_index);
        const double norm = vector_norm(h);
        if (norm == 0.0) {
            throw DegenerateChannelError("MRT toward an all-zero channel row");
        }
        for (std::size_t i = 0; i < m; ++i) {
            bf.weights[i] = std::conj(h[i]) / norm;
        }
        bf.matched_user = unicast_index;
        break;
    }
    case BeamformerKind::EqualGain: {
        const double scale = 1.0 / std::sqrt(static_cast<double>(m));
        std::fill(bf.weights.begin(), bf.weights.end(), Complex(scale, 0.0));
        break;
    }
    case BeamformerKind::Random: {
        double norm = 0.0;
        do {
            for (auto& w : bf.weights) {
                w = complex_normal(rng);
            }
            norm = vector_norm(bf.weights);
        } while (norm == 0.0);
        for (auto& w : bf.weights) {
            w /= norm;
        }
        break;
    }
    }
    return bf;
}

EffectiveGains effective_gains(const ChannelMatrix& channel, const Beamformer& beamformer,
                               std::size_t unicast_index)
{
    if (beamformer.weights.size() != channel.antennas()) {
        throw std::invalid_argument("beamformer length does not match antenna count");
    }
    if (unicast_index >= channel.users()) {
        throw std::out_of_range("unicast index out of range");
    }
    double z1 = 0.0;
    std::vector<double> others;
    others.reserve(channel.users() - 1);
    for (std::size_t k = 0; k < channel.users(); ++k) {
        const auto h = channel.row(k);
        Complex projection = 0.0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            projection += h[i] * beamformer.weights[i];
        }
        if (k == unicast_index) {
            z1 = std::norm(projection);
        } else {
            others.push_back(std::norm(projection));
        }
    }
    if (beamformer.kind == BeamformerKind::Mrt && beamformer.matched_user == unicast_index) {
        // h w = |h| exactly for the matched user; skip the rounding of the dot product.
        z1 = channel.squared_norm(unicast_index);
    }
    return EffectiveGains::from(z1, std::move(others));
}

EffectiveGains sample_gains_direct(std::size_t users, std::size_t antennas, RandomStream& rng)
{
    check_dimensions(users, antennas);
    double z1 = 0.0;
    for (std::size_t i = 0; i < antennas; ++i) {
        z1 += rng.exponential();
    }
    std::vector<double> others(users - 1);
    for (auto& z : others) {
        z = rng.exponential();
    }
    return EffectiveGains::from(z1, std::move(others));
}

std::size_t select_unicast_user(const ChannelMatrix& channel)
{
    std::size_t best = 0;
    double best_norm = channel.squared_norm(0);
    for (std::size_t k = 1; k < channel.users(); ++k) {
        const double n = channel.squared_norm(k);
        if (n > best_norm) {
            best = k;
            best_norm = n;
        }
    }
    return best;
}

BeamformerKind parse_beamformer_kind(const std::string& text)
{
    if (text == "mrt") {
        return BeamformerKind::Mrt;
    }
    if (text == "equal") {
        return BeamformerKind::EqualGain;
    }
    if (text == "random") {
        return BeamformerKind::Random;
    }
    throw std::invalid_argument("unknown beamformer kind '" + text + "'");
}

std::string to_string(BeamformerKind kind)
{
    switch (kind) {
    case BeamformerKind::Mrt:
        return "mrt";
    case BeamformerKind::EqualGain:
        return "equal";
    case BeamformerKind::Random:
        return "random";
    }
    return "unknown";
}

} // namespace nomacast
