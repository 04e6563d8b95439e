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

#include "nomacast/transmission.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nomacast {

void LinkConfig::validate() const
{
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw std::invalid_argument("transmit SNR must be positive and finite");
    }
    if (!(rate_multicast > 0.0) || !(rate_unicast > 0.0)) {
        throw std::invalid_argument("multicast and unicast target rates must be positive");
    }
    if (!(rate_secrecy >= 0.0)) {
        throw std::invalid_argument("secrecy target rate must be nonnegative");
    }
}

double LinkConfig::eps_multicast() const { return std::exp2(rate_multicast) - 1.0; }
double LinkConfig::eps_unicast() const { return std::exp2(rate_unicast) - 1.0; }
double LinkConfig::eps_secrecy() const { return std::exp2(rate_secrecy) - 1.0; }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double UnicastRates::best_eavesdropper() const
{
    if (eavesdroppers.empty()) {
        return 0.0;
    }
    return *std::max_element(eavesdroppers.begin(), eavesdroppers.end());
}

PowerSplit noma_power_split(const EffectiveGains& gains, const LinkConfig& cfg)
{
    const double eps = cfg.eps_multicast();
    const double floor = eps / cfg.rho;
    // (z - eps/rho) / (z (1 + eps)) for one user; negative below the floor.
    auto share = [&](double z) {
        if (z < floor) {
            return 0.0;
        }
        return (z - floor) / (z * (1.0 + eps));
    };
    double alpha = share(gains.z1);
    for (double z : gains.others) {
        alpha = std::min(alpha, share(z));
    }
    return {std::max(0.0, alpha)};
}

UnicastRates noma_rates(const EffectiveGains& gains, const PowerSplit& split, const LinkConfig& cfg)
{
    UnicastRates r;
    r.legitimate = std::log2(1.0 + cfg.rho * gains.z1 * split.alpha_u2);
    r.eavesdroppers.reserve(gains.others.size());
    for (double z : gains.others) {
        r.eavesdroppers.push_back(std::log2(1.0 + cfg.rho * z * split.alpha_u2));
    }
    return r;
}

TimeSplit oma_time_split(const EffectiveGains& gains, const LinkConfig& cfg)
{
    const double capacity = std::log2(1.0 + cfg.rho * gains.weakest());
    if (!(capacity > 0.0)) {
        return {1.0};
    }
    return {std::min(1.0, cfg.rate_multicast / capacity)};
}

UnicastRates oma_rates(const EffectiveGains& gains, const TimeSplit& split, const LinkConfig& cfg)
{
    const double remaining = 1.0 - split.gamma;
    UnicastRates r;
    r.legitimate = remaining * std::log2(1.0 + cfg.rho * gains.z1);
    r.eavesdroppers.reserve(gains.others.size());
    for (double z : gains.others) {
        r.eavesdroppers.push_back(remaining * std::log2(1.0 + cfg.rho * z));
    }
    return r;
}

SecrecyRates secrecy_rates(const UnicastRates& noma, const UnicastRates& oma)
{
    return {
        std::max(0.0, noma.legitimate - noma.best_eavesdropper()),
        std::max(0.0, oma.legitimate - oma.best_eavesdropper()),
    };
}

OutageEvents outage_events(const EffectiveGains& gains, const LinkConfig& cfg)
{
    const PowerSplit split = noma_power_split(gains, cfg);
    OutageEvents e;
    e.multicast = gains.weakest() < cfg.multicast_floor();
    e.unicast = gains.z1 * split.alpha_u2 < cfg.eps_unicast() / cfg.rho;
    e.secrecy = (gains.z1 - std::exp2(cfg.rate_secrecy) * gains.v) * split.alpha_u2 <
                cfg.eps_secrecy() / cfg.rho;
    return e;
}

RateOutcome evaluate_link(const EffectiveGains& noma_gains, const EffectiveGains& oma_gains,
                          const LinkConfig& cfg)
{
    RateOutcome out;
    const PowerSplit split = noma_power_split(noma_gains, cfg);
    const TimeSplit slot = oma_time_split(oma_gains, cfg);
    out.noma = noma_rates(noma_gains, split, cfg);
    out.oma = oma_rates(oma_gains, slot, cfg);
    const SecrecyRates secrecy = secrecy_rates(out.noma, out.oma);
    out.noma_secrecy = secrecy.noma;
    out.oma_secrecy = secrecy.oma;

    const OutageEvents events = outage_events(noma_gains, cfg);
    out.multicast_outage = events.multicast;
    out.unicast_outage = events.unicast;
    out.secrecy_outage = events.secrecy;
    out.oma_multicast_outage = slot.gamma >= 1.0;
    out.oma_unicast_outage = out.oma.legitimate < cfg.rate_unicast;
    out.oma_secrecy_outage = out.oma_secrecy < cfg.rate_secrecy;
    return out;
}

} // namespace nomacast
