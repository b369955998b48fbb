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

#include "paraspec/quadrature.hpp"

#include "paraspec/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

namespace paraspec::quad {

double smooth(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, rel_tol,
                                                                       &error);
}

double endpoint_singular(const std::function<double(double)>& f, double a, double b,
                         double rel_tol) {
  static boost::math::quadrature::tanh_sinh<double> integrator;
  auto g = [&f](double x) { return f(x); };
  return integrator.integrate(g, a, b, rel_tol);
}

double log_trapezoid(const std::function<double(double)>& integrand_times_t, double u_lo,
                     double u_hi, double abs_tol, int max_levels) {
  double h = 0.25;
  auto steps = static_cast<long long>(std::ceil((u_hi - u_lo) / h));
  h = (u_hi - u_lo) / static_cast<double>(steps);

  double sum = 0.5 * (integrand_times_t(u_lo) + integrand_times_t(u_hi));
  for (long long i = 1; i < steps; ++i) sum += integrand_times_t(u_lo + static_cast<double>(i) * h);
  double estimate = h * sum;

  for (int level = 0; level < max_levels; ++level) {
    // Add the midpoints of the current grid.
    double mid = 0.0;
    for (long long i = 0; i < steps; ++i)
      mid += integrand_times_t(u_lo + (static_cast<double>(i) + 0.5) * h);
    sum += mid;
    steps *= 2;
    h *= 0.5;
    const double refined = h * sum;
    if (std::abs(refined - estimate) < abs_tol) return refined;
    estimate = refined;
  }
  throw Error(ErrorKind::NonConvergence, "log-trapezoid quadrature did not converge");
}

}  // namespace paraspec::quad
