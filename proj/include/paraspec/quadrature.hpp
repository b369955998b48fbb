// Copyright 2026 The paraspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>

namespace paraspec::quad {

/// Adaptive Gauss-Kronrod (61-point) on a finite interval with a smooth
/// integrand.
double smooth(const std::function<double(double)>& f, double a, double b,
              double rel_tol = 1e-14);

/// Tanh-sinh on (a, b], tolerating integrable endpoint singularities.
double endpoint_singular(const std::function<double(double)>& f, double a, double b,
                         double rel_tol = 1e-13);

/// Trapezoid rule in u = log t for integrals over (0, inf) whose integrand
/// (already multiplied by t) decays fast at both ends of [u_lo, u_hi]. The
/// step is halved until two successive estimates differ by less than
/// abs_tol; throws Error(NonConvergence) after max_levels halvings.
double log_trapezoid(const std::function<double(double)>& integrand_times_t, double u_lo,
                     double u_hi, double abs_tol, int max_levels = 14);

}  // namespace paraspec::quad
