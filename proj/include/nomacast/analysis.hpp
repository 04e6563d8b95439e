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

#include <stdexcept>
#include <vector>

#include "nomacast/incomplete_gamma.hpp"
#include "nomacast/quadrature.hpp"
#include "nomacast/transmission.hpp"

namespace nomacast {

/// Raised for closed forms that do not exist for the requested system,
/// e.g. secrecy outage with a single eavesdropper (K = 2).
class UnsupportedAnalyticsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thresholds shared by all the closed-form expressions.
struct AnalysisParams {
    int antennas = 1; ///< M
    int users = 2;    ///< K
    double rho = 1.0;
    double rate_multicast = 1.0;
    double rate_secrecy = 0.0;
    double eps_multicast = 1.0;
    double eps_unicast = 1.0;
    double eps_secrecy = 0.0;

    double multicast_floor = 0.0;   ///< eps_M / rho
    double unicast_margin = 0.0;    ///< eps_U (1 + eps_M) / rho
    double unicast_threshold = 0.0; ///< multicast_floor + unicast_margin
    double secrecy_margin = 0.0;    ///< eps_S (1 + eps_M) / rho
    /// Range of 1/u over which an eavesdropper can be the unicast bottleneck.
    double inverse_gain_lo = 0.0;
    double inverse_gain_hi = 0.0;

    static AnalysisParams make(int antennas, int users, const LinkConfig& cfg);
};

/// Probability that the weakest user cannot decode the multicast stream
/// (identical for NOMA and OMA).
double multicast_outage_prob(const AnalysisParams& p);

/// NOMA unicast outage split by which gain limits the unicast power:
/// multicast outage, the unicast user itself, or the weakest other user.
struct UnicastOutage {
    double probability = 0.0; ///< clamped to [0, 1]
    double unclamped = 0.0;
    double multicast_term = 0.0;
    double self_limited_term = 0.0;
    double other_limited_term = 0.0; ///< Chebyshev-Gauss approximation
    /// Set when doubling the node count moves the result by more than 1e-4.
    bool under_resolved = false;
};

UnicastOutage unicast_outage_prob(const AnalysisParams& p, const QuadratureRule& rule);

/// Integrand of the other-limited term over 1/u, exposed for validation.
double other_limited_integrand(const AnalysisParams& p, double inverse_gain);

struct UnicastOutageBounds {
    double lower = 0.0;          ///< the multicast term
    double upper = 0.0;          ///< multicast + self-limited + other-limited bound
    double lower_high_snr = 0.0; ///< K eps_M / rho
    double self_limited_term = 0.0;
    double other_limited_bound = 0.0;
};

UnicastOutageBounds unicast_outage_bounds(const AnalysisParams& p);

/// Lower bound on P(R_{U,1} <= OMA rate) and its high-SNR limit K^{-M}.
struct NomaDeficitBound {
    double exact = 0.0;
    double high_snr = 0.0;
};

NomaDeficitBound pd_lower_bound(const AnalysisParams& p);

/// NOMA-minus-OMA unicast rate (bits) of a user with gain `gain` when the
/// weakest user, with gain `bottleneck`, fixes both power and time split.
/// Zero at gain == bottleneck. Throws unless bottleneck > eps_M / rho.
double noma_rate_advantage(double bottleneck, double gain, const AnalysisParams& p);

/// Joint density of the min and max of K-1 i.i.d. Exp(1) gains (K >= 3).
double joint_minmax_pdf(double u, double v, int users);

/// Coefficients (K-1)(K-2) C(K-3, m) (-1)^m of the exponential expansion
/// of joint_minmax_pdf, m = 0..K-3.
std::vector<double> minmax_pdf_coefficients(int users);

/// joint_minmax_pdf evaluated through the coefficient expansion.
double joint_minmax_pdf_expanded(double u, double v, int users);

/// How the outer (largest eavesdropper gain) integral of the secrecy terms
/// is put onto [-1, 1].
enum class OuterMapping {
    /// v in [eps_M/rho, eps_M/rho + 40], a linear map; the dropped tail is
    /// below (K-1) e^{-40}.
    Truncated,
    /// y = 1/v on (0, rho/eps_M]. Only accurate up to about 25 dB, since
    /// the nodes spread over the whole reciprocal range.
    Reciprocal,
};

/// NOMA secrecy outage split into the power-limited term, the
/// no-advantage term (closed form) and the eavesdropper-dominant term.
struct SecrecyOutage {
    double probability = 0.0;
    double unclamped = 0.0;
    double power_limited_term = 0.0;
    double no_advantage_term = 0.0;
    double eavesdropper_dominant_term = 0.0;
};

SecrecyOutage secrecy_outage_prob(const AnalysisParams& p, const QuadratureRule& rule,
                                  OuterMapping mapping = OuterMapping::Truncated);

} // namespace nomacast
