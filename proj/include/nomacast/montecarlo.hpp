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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nomacast/channel_model.hpp"
#include "nomacast/transmission.hpp"

namespace nomacast {

enum class SamplingMode {
    FullMatrix,  ///< draw H, build beamformers, project
    DirectGains, ///< draw z1 ~ Gamma(M, 1) and z_k ~ Exp(1) directly
};

struct SimulationPlan {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0x5EED'2016'0A11'CA57ull;
    SamplingMode mode = SamplingMode::FullMatrix;
    bool scheduling = false;
    BeamformerKind oma_beamformer = BeamformerKind::Mrt;
    unsigned workers = 1;
    /// Added to every realization index to form its stream id.
    std::uint64_t stream_offset = 0;

    /// Rejects samples == 0, workers == 0, scheduling or a non-MRT OMA
    /// beamformer combined with DirectGains.
    void validate() const;
};

struct SystemSize {
    int antennas = 1; ///< M
    int users = 2;    ///< K
};

/// Per-realization quantities that can be averaged. Names without a scheme
/// suffix refer to NOMA.
enum class MetricKind {
    MulticastOutage,
    UnicastOutage,
    UnicastOutageOma,
    SecrecyOutage,
    SecrecyOutageOma,
    NomaNotBetter, ///< P(R_{U,1} <= OMA unicast rate)
    MeanNomaUnicastRate,
    MeanOmaUnicastRate,
    MeanNomaSecrecyRate,
    MeanOmaSecrecyRate,
    OutageRateUnicast,
    OutageRateUnicastOma,
    OutageRateSecrecy,
    OutageRateSecrecyOma,
};

std::string to_string(MetricKind kind);
MetricKind parse_metric_kind(const std::string& name);
std::span<const MetricKind> all_metric_kinds();
bool is_probability(MetricKind kind);
bool needs_secrecy_target(MetricKind kind);

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t samples = 0;
};

/// Sample mean with standard error s / sqrt(n) and a 95% normal interval,
/// clamped to [0, 1] when `probability` is set.
Estimate make_estimate(double sum, double sum_squares, std::uint64_t n, bool probability);

struct Realization {
    std::size_t unicast_user = 0;
    EffectiveGains noma_gains;
    EffectiveGains oma_gains;
    RateOutcome outcome;
};

/// Realization `index` of the plan; uses stream (seed, stream_offset + index).
Realization simulate_realization(const LinkConfig& cfg, SystemSize sys,
                                 const SimulationPlan& plan, std::uint64_t index);

double metric_value(MetricKind kind, const RateOutcome& outcome, const LinkConfig& cfg);

/// One pass over the plan's realizations, estimating every requested metric.
std::map<MetricKind, Estimate> estimate_many(std::span<const MetricKind> metrics,
                                             const LinkConfig& cfg, SystemSize sys,
                                             const SimulationPlan& plan);

Estimate estimate(MetricKind metric, const LinkConfig& cfg, SystemSize sys,
                  const SimulationPlan& plan);

struct SweepPoint {
    double snr_db = 0.0;
    std::map<MetricKind, Estimate> estimates;
};

/// Grid point p draws from streams offset by p << 40, so every point gets
/// fresh realizations from the same seed. `cfg.rho` is ignored.
std::vector<SweepPoint> sweep(std::span<const MetricKind> metrics, const LinkConfig& cfg,
                              SystemSize sys, std::span<const double> snr_grid_db,
                              const SimulationPlan& plan);

/// Per-realization comparison of the NOMA and OMA secrecy rates.
struct SecrecyComparison {
    Estimate violation_fraction; ///< P(R_S < OMA secrecy rate - 1e-9)
    Estimate mean_gap;           ///< E[R_S - OMA secrecy rate]
};

SecrecyComparison compare_secrecy_rates(const LinkConfig& cfg, SystemSize sys,
                                   const SimulationPlan& plan, double rho_db);

/// Exact per-realization predicates counted over a plan.
struct InvariantAudit {
    std::uint64_t samples = 0;
    /// Realizations where alpha_U^2 = 0 and gamma = 1 disagree.
    std::uint64_t multicast_mismatches = 0;
    /// Realizations with z1 < u.
    std::uint64_t weak_unicast_user = 0;
};

InvariantAudit audit_invariants(const LinkConfig& cfg, SystemSize sys, const SimulationPlan& plan);

} // namespace nomacast
