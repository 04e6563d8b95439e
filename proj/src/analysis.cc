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

#include "nomacast/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nomacast {

namespace {

constexpr double kTruncatedSpan = 40.0;
constexpr double kRefinementTolerance = 1e-4;

double clamp_probability(double x) { return std::clamp(x, 0.0, 1.0); }

void require_secrecy_support(int users)
{
    if (users < 3) {
        throw UnsupportedAnalyticsError(
            "secrecy analytics need K >= 3 (at least two eavesdroppers), got K = " +
            std::to_string(users));
    }
}

double binomial(int n, int k)
{
    double c = 1.0;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return c;
}

// Unchecked joint density of (min, max); zero outside u <= v.
double minmax_density(double u, double v, int users)
{
    if (u > v) {
        return 0.0;
    }
    const double k = users;
    // e^{-u} - e^{-v} written as e^{-u} (1 - e^{-(v-u)}) to keep digits when v ~ u.
    const double gap = std::exp(-u) * -std::expm1(-(v - u));
    return (k - 1) * (k - 2) * std::exp(-u - v) * std::pow(gap, users - 3);
}

} // namespace

AnalysisParams AnalysisParams::make(int antennas, int users, const LinkConfig& cfg)
{
    cfg.validate();
    if (antennas < 1) {
        throw std::invalid_argument("analysis needs M >= 1");
    }
    if (users < 2) {
        throw std::invalid_argument("analysis needs K >= 2");
    }
    AnalysisParams p;
    p.antennas = antennas;
    p.users = users;
    p.rho = cfg.rho;
    p.rate_multicast = cfg.rate_multicast;
    p.rate_secrecy = cfg.rate_secrecy;
    p.eps_multicast = cfg.eps_multicast();
    p.eps_unicast = cfg.eps_unicast();
    p.eps_secrecy = cfg.eps_secrecy();
    p.multicast_floor = p.eps_multicast / p.rho;
    p.unicast_margin = p.eps_unicast * (1.0 + p.eps_multicast) / p.rho;
    p.unicast_threshold = p.multicast_floor + p.unicast_margin;
    p.secrecy_margin = p.eps_secrecy * (1.0 + p.eps_multicast) / p.rho;
    p.inverse_gain_lo =
        1.0 / (p.unicast_margin * (1.0 + p.eps_multicast / (p.rho * p.unicast_margin)));
    p.inverse_gain_hi = p.rho / p.eps_multicast;
    return p;
}

double multicast_outage_prob(const AnalysisParams& p)
{
    // 1 - Q(M, c) e^{-(K-1)c}, rearranged so small values keep their digits.
    const double c = p.multicast_floor;
    const double others_clear = std::exp(-(p.users - 1) * c);
    return -std::expm1(-(p.users - 1) * c) + gamma_p(p.antennas, c) * others_clear;
}

double other_limited_integrand(const AnalysisParams& p, double inverse_gain)
{
    // P(1/z1 < z) for the reciprocal of the Gamma(M, 1) gain.
    auto inverse_gain_cdf = [&](double z) {
        return z > 0.0 ? gamma_q(p.antennas, 1.0 / z) : 0.0;
    };
    const double x = inverse_gain;
    const double lower_edge = (1.0 - p.multicast_floor * x) / p.unicast_margin;
    const double others = p.users - 1;
    const double density = others / (x * x) * std::exp(-others / x);
    return (inverse_gain_cdf(x) - inverse_gain_cdf(lower_edge)) * density;
}

UnicastOutage unicast_outage_prob(const AnalysisParams& p, const QuadratureRule& rule)
{
    const int m = p.antennas;
    const double k = p.users;
    UnicastOutage out;
    out.multicast_term = multicast_outage_prob(p);
    out.self_limited_term = (gamma_p(m, k * p.unicast_threshold) -
                             gamma_p(m, k * p.multicast_floor)) /
                            std::pow(k, m);

    auto other_limited = [&](const QuadratureRule& r) {
        return r.integrate([&](double x) { return other_limited_integrand(p, x); },
                           p.inverse_gain_lo, p.inverse_gain_hi);
    };
    out.other_limited_term = other_limited(rule);
    out.unclamped = out.multicast_term + out.self_limited_term + out.other_limited_term;
    out.probability = clamp_probability(out.unclamped);

    const double refined = other_limited(cheb_rule(2 * rule.size()));
    out.under_resolved = std::abs(refined - out.other_limited_term) > kRefinementTolerance;
    return out;
}

UnicastOutageBounds unicast_outage_bounds(const AnalysisParams& p)
{
    const int m = p.antennas;
    const double k = p.users;
    UnicastOutageBounds b;
    b.lower = multicast_outage_prob(p);
    b.self_limited_term =
        (gamma_p(m, k * p.unicast_threshold) - gamma_p(m, k * p.multicast_floor)) / std::pow(k, m);
    b.other_limited_bound =
        std::exp(-(k - 1) * p.multicast_floor) * -std::expm1(-(k - 1) * p.unicast_margin);
    b.upper = b.lower + b.self_limited_term + b.other_limited_bound;
    b.lower_high_snr = k * p.multicast_floor;
    return b;
}

NomaDeficitBound pd_lower_bound(const AnalysisParams& p)
{
    const double scale = std::pow(static_cast<double>(p.users), -p.antennas);
    return {gamma_q(p.antennas, p.users * p.multicast_floor) * scale, scale};
}

double noma_rate_advantage(double bottleneck, double gain, const AnalysisParams& p)
{
    if (!(bottleneck > p.multicast_floor)) {
        throw std::invalid_argument("rate advantage needs a bottleneck gain above eps_M / rho");
    }
    const double u = bottleneck;
    const double share = (u - p.multicast_floor) / (u * (1.0 + p.eps_multicast));
    const double unicast_time = 1.0 - p.rate_multicast / std::log2(1.0 + p.rho * u);
    return std::log2(1.0 + p.rho * gain * share) - unicast_time * std::log2(1.0 + p.rho * gain);
}

double joint_minmax_pdf(double u, double v, int users)
{
    require_secrecy_support(users);
    if (!(u >= 0.0) || !(v >= u)) {
        throw std::invalid_argument("joint min/max density needs 0 <= u <= v");
    }
    return minmax_density(u, v, users);
}

std::vector<double> minmax_pdf_coefficients(int users)
{
    require_secrecy_support(users);
    const double lead = static_cast<double>(users - 1) * (users - 2);
    std::vector<double> tau(users - 2);
    for (int m = 0; m <= users - 3; ++m) {
        tau[m] = lead * binomial(users - 3, m) * (m % 2 == 0 ? 1.0 : -1.0);
    }
    return tau;
}

double joint_minmax_pdf_expanded(double u, double v, int users)
{
    const auto tau = minmax_pdf_coefficients(users);
    double sum = 0.0;
    for (int m = 0; m <= users - 3; ++m) {
        sum += tau[m] * std::exp(-(users - 2 - m) * u) * std::exp(-(m + 1) * v);
    }
    return sum;
}

SecrecyOutage secrecy_outage_prob(const AnalysisParams& p, const QuadratureRule& rule,
                                  OuterMapping mapping)
{
    require_secrecy_support(p.users);
    const int m = p.antennas;
    const double k = p.users;
    const double c = p.multicast_floor;
    const double ratio = std::exp2(p.rate_secrecy);

    SecrecyOutage out;
    out.no_advantage_term = 1.0 - gamma_q(m, c) * std::exp(-c * (k - 1)) +
                            std::pow(k, -m) * gamma_q(m, c * k);

    // Integrates both remaining terms over c < u < v for one value of v.
    auto inner = [&](double v, double& power_limited, double& dominant) {
        const double half = 0.5 * (v - c);
        const double mid = 0.5 * (v + c);
        const double below_scaled = gamma_p(m, ratio * v);
        power_limited = 0.0;
        dominant = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const double u = half * rule.nodes[i] + mid;
            if (!(u > c)) {
                continue;
            }
            const double weight = rule.weights[i] * rule.root_weight(i) * minmax_density(u, v, p.users);
            const double window = p.secrecy_margin / (1.0 - c / u);
            power_limited += weight * (gamma_p(m, ratio * v + window) - below_scaled);
            dominant += weight * (below_scaled - gamma_p(m, u));
        }
        power_limited *= half;
        dominant *= half;
    };

    double power_limited = 0.0;
    double dominant = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j) {
        double v = 0.0;
        double jacobian = 0.0;
        if (mapping == OuterMapping::Truncated) {
            const double half = 0.5 * kTruncatedSpan;
            v = c + half * (rule.nodes[j] + 1.0);
            jacobian = half;
        } else {
            const double y = (rule.nodes[j] + 1.0) / (2.0 * c);
            v = 1.0 / y;
            jacobian = v * v / (2.0 * c);
        }
        double a = 0.0;
        double b = 0.0;
        inner(v, a, b);
        const double weight = rule.weights[j] * rule.root_weight(j) * jacobian;
        power_limited += weight * a;
        dominant += weight * b;
    }
    out.power_limited_term = power_limited;
    out.eavesdropper_dominant_term = dominant;
    out.unclamped = out.power_limited_term + out.no_advantage_term + out.eavesdropper_dominant_term;
    out.probability = clamp_probability(out.unclamped);
    return out;
}

} // namespace nomacast
