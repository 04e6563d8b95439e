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

// Reference computations used by the tests. Everything here is written
// directly from the system model (gain distributions and outage events) and
// deliberately avoids the library's own closed forms and integration rules.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace oracle {

inline double eps(double rate) { return std::exp2(rate) - 1.0; }

/// P(Gamma(M, 1) <= x).
inline double gamma_cdf(int m, double x)
{
    if (x <= 0.0) {
        return 0.0;
    }
    if (std::isinf(x)) {
        return 1.0;
    }
    return boost::math::gamma_p(static_cast<double>(m), x);
}

// The checks built on these integrals need about 1e-6 absolute accuracy,
// so the recursion is kept shallow.
template <typename F>
double adaptive(F f, double lo, double hi, unsigned depth = 10)
{
    double error = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, depth, 1e-10, &error);
}

struct Thresholds {
    double c;   // eps_M / rho
    double psi; // eps_U (1 + eps_M) / rho
    double xi;  // eps_S (1 + eps_M) / rho
};

inline Thresholds thresholds(double rho, double r_m, double r_u, double r_s)
{
    const double em = eps(r_m);
    return {em / rho, eps(r_u) * (1.0 + em) / rho, eps(r_s) * (1.0 + em) / rho};
}

/// Unicast outage caused by the weakest other user u limiting the power split
/// while u < z1: P(c < u, u < z1 < psi u / (u - c)).
inline double other_limited(int m, int k, double rho, double r_m, double r_u)
{
    const auto t = thresholds(rho, r_m, r_u, 0.0);
    const double n = k - 1;
    auto f = [&](double u) {
        if (u <= t.c) {
            return 0.0;
        }
        const double hi = t.psi * u / (u - t.c);
        return n * std::exp(-n * u) * std::max(0.0, gamma_cdf(m, hi) - gamma_cdf(m, u));
    };
    // The window u < z1 < psi u/(u - c) is empty once u > c + psi.
    return adaptive(f, t.c, t.c + t.psi);
}

/// Joint density of the min u and max v of n = K-1 i.i.d. Exp(1) variables.
inline double minmax_density(double u, double v, int k)
{
    if (u < 0.0 || v < u) {
        return 0.0;
    }
    const double n = k - 1;
    return n * (n - 1) * std::exp(-u - v) * std::pow(std::exp(-u) - std::exp(-v), k - 3);
}

/// Integral of g(u, v) f(u, v) over c < u < v < infinity.
template <typename G>
double over_minmax(int k, double c, G g)
{
    auto outer = [&](double v) {
        auto inner = [&](double u) { return g(u, v) * minmax_density(u, v, k); };
        return adaptive(inner, c, v, 6);
    };
    return adaptive(outer, c, std::numeric_limits<double>::infinity(), 6);
}

/// Secrecy outage with a working power split but a too-small margin:
/// P(c < u, 2^Rs v < z1 < 2^Rs v + xi u / (u - c)).
inline double power_limited(int m, int k, double rho, double r_m, double r_s)
{
    const auto t = thresholds(rho, r_m, 0.0, r_s);
    const double ratio = std::exp2(r_s);
    return over_minmax(k, t.c, [&](double u, double v) {
        return gamma_cdf(m, ratio * v + t.xi * u / (u - t.c)) - gamma_cdf(m, ratio * v);
    });
}

/// Secrecy outage where z1 is above u but the strongest eavesdropper wins:
/// P(c < u, u < z1 < 2^Rs v).
inline double eavesdropper_dominant(int m, int k, double rho, double r_m, double r_s)
{
    const auto t = thresholds(rho, r_m, 0.0, r_s);
    const double ratio = std::exp2(r_s);
    return over_minmax(k, t.c, [&](double u, double v) {
        return std::max(0.0, gamma_cdf(m, ratio * v) - gamma_cdf(m, u));
    });
}

/// Gains z1 ~ Gamma(M, 1), others ~ Exp(1), from a standard-library engine.
struct GainSampler {
    explicit GainSampler(std::uint64_t seed) : engine(seed) {}

    void draw(int m, int k, double& z1, std::vector<double>& others)
    {
        std::gamma_distribution<double> gamma(m, 1.0);
        std::exponential_distribution<double> expo(1.0);
        z1 = gamma(engine);
        others.resize(k - 1);
        for (auto& z : others) {
            z = expo(engine);
        }
    }

    std::mt19937_64 engine;
};

/// Outage flags written straight from the event definitions.
struct Events {
    bool multicast;
    bool unicast;
    bool secrecy;
    double noma_unicast_rate;
    double oma_unicast_rate;
};

inline Events events(double z1, const std::vector<double>& others, double rho, double r_m,
                     double r_u, double r_s)
{
    const double em = eps(r_m);
    double alpha = 1.0;
    double weakest = z1;
    for (double z : others) {
        weakest = std::min(weakest, z);
    }
    for (double z : {z1, weakest}) {
        alpha = std::min(alpha, (z - em / rho) / (z * (1.0 + em)));
    }
    alpha = std::max(alpha, 0.0);
    const double v = *std::max_element(others.begin(), others.end());

    Events e{};
    e.multicast = alpha == 0.0;
    e.noma_unicast_rate = std::log2(1.0 + rho * alpha * z1);
    e.unicast = e.noma_unicast_rate < r_u;
    const double secrecy = std::max(0.0, e.noma_unicast_rate - std::log2(1.0 + rho * alpha * v));
    e.secrecy = secrecy < r_s || e.multicast;
    const double capacity = std::log2(1.0 + rho * weakest);
    const double gamma = capacity > r_m ? r_m / capacity : 1.0;
    e.oma_unicast_rate = (1.0 - gamma) * std::log2(1.0 + rho * z1);
    return e;
}

} // namespace oracle
