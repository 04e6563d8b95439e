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

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace nomacast {

/// N-point Chebyshev-Gauss rule: nodes cos((2i-1) pi / 2N), equal weights pi/N.
struct QuadratureRule {
    std::vector<double> nodes;   ///< strictly decreasing in (-1, 1)
    std::vector<double> weights; ///< all pi/N

    std::size_t size() const { return nodes.size(); }

    /// Approximates the integral of f over [lo, hi] by mapping it onto
    /// [-1, 1] and applying the rule to f(x) sqrt(1 - x^2).
    template <typename F>
    double integrate(F&& f, double lo, double hi) const
    {
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            sum += weights[i] * f(half * nodes[i] + mid) * root_weight(i);
        }
        return half * sum;
    }

    /// sqrt(1 - x_i^2) for node i.
    double root_weight(std::size_t i) const { return root_weights_[i]; }

    friend QuadratureRule cheb_rule(std::size_t n);

private:
    std::vector<double> root_weights_;
};

QuadratureRule cheb_rule(std::size_t n);

class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod reference integrator used to validate the
/// Chebyshev-Gauss approximations. `hi` may be +infinity. Throws
/// IntegrationError when the error estimate stays above `tol`.
double oracle_integrate(const std::function<double(double)>& f, double lo, double hi, double tol);

} // namespace nomacast
