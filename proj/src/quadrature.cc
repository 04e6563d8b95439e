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

#include "nomacast/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace nomacast {

QuadratureRule cheb_rule(std::size_t n)
{
    if (n < 1) {
        throw std::invalid_argument("Chebyshev-Gauss rule needs at least one node");
    }
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.assign(n, std::numbers::pi / static_cast<double>(n));
    rule.root_weights_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle =
            std::numbers::pi * static_cast<double>(2 * i + 1) / static_cast<double>(2 * n);
        rule.nodes[i] = std::cos(angle);
        // sin(angle) is sqrt(1 - cos^2) without the cancellation near the ends.
        rule.root_weights_[i] = std::sin(angle);
    }
    return rule;
}

double oracle_integrate(const std::function<double(double)>& f, double lo, double hi, double tol)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("oracle tolerance must be positive");
    }
    if (lo == hi) {
        return 0.0;
    }
    constexpr unsigned kMaxDepth = 15;
    double error = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, lo, hi, kMaxDepth, std::clamp(tol * 1e-2, 1e-14, 1e-6), &error);
    if (!std::isfinite(value) || error > tol * std::max(1.0, std::abs(value))) {
        std::ostringstream msg;
        msg << "adaptive quadrature did not converge on [" << lo << ", " << hi
            << "]: estimate " << value << ", error " << error << ", tol " << tol;
        throw IntegrationError(msg.str());
    }
    return value;
}

} // namespace nomacast
