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

#include "nomacast/incomplete_gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace nomacast {

namespace {

void check_arguments(int shape, double x)
{
    if (shape < 1) {
        throw std::invalid_argument("incomplete gamma needs an integer shape >= 1");
    }
    if (!(x >= 0.0)) {
        throw std::invalid_argument("incomplete gamma needs x >= 0");
    }
}

// Poisson(x) pmf summed over 0..shape-1; each term stays <= 1 so nothing overflows.
double poisson_head(int shape, double x)
{
    double term = std::exp(-x);
    double sum = term;
    for (int m = 1; m < shape; ++m) {
        term *= x / m;
        sum += term;
    }
    return sum;
}

// Tail sum_{m >= shape} of the Poisson(x) pmf; converges quickly for x < shape.
double poisson_tail(int shape, double x)
{
    double term = std::exp(-x);
    for (int m = 1; m <= shape; ++m) {
        term *= x / m;
    }
    double sum = 0.0;
    for (int j = 1; j < 1000 && term > 1e-18 * sum; ++j) {
        sum += term;
        term *= x / (shape + j);
    }
    return sum;
}

} // namespace

double factorial_of_shape(int shape)
{
    double f = 1.0;
    for (int m = 2; m < shape; ++m) {
        f *= m;
    }
    return f;
}

double gamma_q(int shape, double x)
{
    check_arguments(shape, x);
    if (std::isinf(x)) {
        return 0.0;
    }
    if (x < shape) {
        return 1.0 - poisson_tail(shape, x);
    }
    return poisson_head(shape, x);
}

double gamma_p(int shape, double x)
{
    check_arguments(shape, x);
    if (std::isinf(x)) {
        return 1.0;
    }
    if (x < shape) {
        return poisson_tail(shape, x);
    }
    return 1.0 - poisson_head(shape, x);
}

IncompleteGamma inc_gamma_int(int shape, double x)
{
    const double scale = factorial_of_shape(shape);
    return {scale * gamma_q(shape, x), scale * gamma_p(shape, x)};
}

} // namespace nomacast
