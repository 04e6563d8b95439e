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

#include <vector>

#include "nomacast/channel_model.hpp"

namespace nomacast {

/// Transmit SNR (linear) and target rates in bits per channel use.
struct LinkConfig {
    double rho = 1.0;
    double rate_multicast = 1.0;
    double rate_unicast = 1.0;
    double rate_secrecy = 0.0;

    /// Throws std::invalid_argument unless rho, R_M, R_U > 0 and R_S >= 0.
    void validate() const;

    double eps_multicast() const;
    double eps_unicast() const;
    double eps_secrecy() const;
    /// eps_M / rho: the smallest gain that still decodes the multicast stream.
    double multicast_floor() const { return eps_multicast() / rho; }
};

double db_to_linear(double db);

/// NOMA power split; alpha_u2 is the unicast share of the transmit power.
struct PowerSplit {
    double alpha_u2 = 0.0;
    double alpha_m2() const { return 1.0 - alpha_u2; }
};

/// OMA time split; gamma is the fraction of time spent on multicast.
struct TimeSplit {
    double gamma = 1.0;
};

struct UnicastRates {
    double legitimate = 0.0;         ///< rate at the unicast user
    std::vector<double> eavesdroppers; ///< same order as EffectiveGains::others

    double best_eavesdropper() const;
};

struct SecrecyRates {
    double noma = 0.0;
    double oma = 0.0;
};

struct OutageEvents {
    bool multicast = false;
    bool unicast = false;
    bool secrecy = false;
};

/// Everything computed for one fading realization.
struct RateOutcome {
    UnicastRates noma;
    UnicastRates oma;
    double noma_secrecy = 0.0;
    double oma_secrecy = 0.0;
    bool multicast_outage = false;     ///< NOMA (alpha_U^2 = 0)
    bool oma_multicast_outage = false; ///< OMA (gamma = 1)
    bool unicast_outage = false;       ///< NOMA
    bool secrecy_outage = false;       ///< NOMA
    bool oma_unicast_outage = false;
    bool oma_secrecy_outage = false;
};

/// Largest unicast power share that keeps every user's multicast rate at R_M.
PowerSplit noma_power_split(const EffectiveGains& gains, const LinkConfig& cfg);

/// Rates log2(1 + rho z alpha_U^2) after SIC of the multicast layer.
UnicastRates noma_rates(const EffectiveGains& gains, const PowerSplit& split, const LinkConfig& cfg);

/// Shortest multicast slot that delivers R_M to the weakest user (1 = all multicast).
TimeSplit oma_time_split(const EffectiveGains& gains, const LinkConfig& cfg);

UnicastRates oma_rates(const EffectiveGains& gains, const TimeSplit& split, const LinkConfig& cfg);

/// Positive part of (legitimate - best eavesdropper) for each scheme.
SecrecyRates secrecy_rates(const UnicastRates& noma, const UnicastRates& oma);

/// Outage predicates of the NOMA scheme evaluated directly on the gains.
OutageEvents outage_events(const EffectiveGains& gains, const LinkConfig& cfg);

/// Full per-realization evaluation. `oma_gains` may come from a different
/// beamformer than `noma_gains`; pass the same object for p = w.
RateOutcome evaluate_link(const EffectiveGains& noma_gains, const EffectiveGains& oma_gains,
                          const LinkConfig& cfg);

} // namespace nomacast
