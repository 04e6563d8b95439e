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

namespace nomacast {

/// Upper and lower incomplete gamma functions for an integer shape,
/// unnormalized: upper + lower = (shape - 1)!.
struct IncompleteGamma {
    double upper = 0.0;
    double lower = 0.0;
};

/// Exact for integer shape: upper = (M-1)! e^{-x} sum_{m<M} x^m / m!.
/// Throws std::invalid_argument for shape < 1 or x < 0 (or NaN).
IncompleteGamma inc_gamma_int(int shape, double x);

/// Regularized upper incomplete gamma Q(M, x) = P(Gamma(M, 1) > x).
double gamma_q(int shape, double x);

/// Regularized lower incomplete gamma P(M, x) = P(Gamma(M, 1) <= x).
double gamma_p(int shape, double x);

/// (M - 1)! as a double.
double factorial_of_shape(int shape);

} // namespace nomacast
