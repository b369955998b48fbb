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

#include "paraspec/specfun.hpp"

#include "paraspec/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace paraspec {

namespace {

// B_{2j} / (2j)! for j = 1..30.
constexpr std::array<long double, 30> kBernoulliOverFactorial = {
    8.33333333333333333333e-2L, -1.38888888888888888889e-3L, 3.30687830687830687831e-5L,
    -8.26719576719576719577e-7L, 2.08767569878680989792e-8L, -5.28419013868749318485e-10L,
    1.33825365306846788328e-11L, -3.38968029632258286683e-13L, 8.58606205627784456414e-15L,
    -2.17486869855806187304e-16L, 5.5090028283602295152e-18L, -1.39544646858125233407e-19L,
    3.53470703962946747169e-21L, -8.9535174270375468504e-23L, 2.26795245233768306031e-24L,
    -5.74479066887220244526e-26L, 1.45517247561486490187e-27L, -3.68599494066531017818e-29L,
    9.33673425709504467203e-31L, -2.36502241570062993456e-32L, 5.99067176248213430466e-34L,
    -1.51745488446829026171e-35L, 3.84375812545418823223e-37L, -9.73635307264669103527e-39L,
    2.46624704420068095711e-40L, -6.24707674182074369315e-42L, 1.58240302446449142975e-43L,
    -4.00827368594893596853e-45L, 1.01530758555695563116e-46L, -2.57180415824187174992e-48L,
};

void check_beta(const Rational& beta) {
  if (beta <= 0 || beta > 1)
    throw Error(ErrorKind::Domain, "beta = " + to_string(beta) + " is not in (0,1]");
}

}  // namespace

void PrecisionPolicy::check() const {
  if (!(target_abs_tol > 0))
    throw Error(ErrorKind::Domain, "target_abs_tol must be positive");
  if (max_terms < 8) throw Error(ErrorKind::Domain, "max_terms must be at least 8");
}

namespace detail {

double hurwitz_zeta_em(double s, double beta, const PrecisionPolicy& policy) {
  policy.check();
  if (s == 1.0) throw Error(ErrorKind::PoleAtOne, "Hurwitz zeta has a pole at s = 1");

  // Start with a head long enough that the Bernoulli tail converges
  // (ratio of successive corrections ~ ((s + 2j) / (2 pi x))^2).
  long long head = std::max<long long>(10, static_cast<long long>(std::ceil(std::abs(s))) + 2);
  for (;;) {
    if (head > policy.max_terms) break;
    // Extended precision: for s < 0 the head sum and the integral term
    // cancel to many digits.
    const long double b = beta;
    const long double x = static_cast<long double>(head) + b;
    const long double sl = s;

    long double sum = 0.0L;
    for (long long k = head - 1; k >= 0; --k) sum += std::pow(static_cast<long double>(k) + b, -sl);
    sum += std::pow(x, 1.0L - sl) / (sl - 1.0L);
    sum += 0.5L * std::pow(x, -sl);

    // Rising factorial s (s+1) ... (s+2j-2) times x^{-s-2j+1}.
    long double factor = sl * std::pow(x, -sl - 1.0L);
    bool converged = false;
    for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
      const long double term = kBernoulliOverFactorial[j] * factor;
      sum += term;
      if (std::abs(term) < 0.1L * policy.target_abs_tol) {
        converged = true;
        break;
      }
      const long double a = sl + 2.0L * static_cast<long double>(j) + 1.0L;
      factor *= a * (a + 1.0L) / (x * x);
    }
    if (converged) return static_cast<double>(sum);
    head *= 2;
  }
  throw Error(ErrorKind::NonConvergence,
              "Hurwitz zeta: tolerance not reached within max_terms");
}

}  // namespace detail

double hurwitz_zeta(double s, const Rational& beta, const PrecisionPolicy& policy) {
  check_beta(beta);
  return detail::hurwitz_zeta_em(s, to_double(beta), policy);
}

Rational hurwitz_zeta_at_zero(const Rational& beta) {
  check_beta(beta);
  return Rational(1, 2) - beta;
}

double hurwitz_zeta_deriv_at_zero(const Rational& beta, const PrecisionPolicy& policy) {
  check_beta(beta);
  policy.check();
  return std::lgamma(to_double(beta)) - 0.5 * std::log(2.0 * std::numbers::pi);
}

double truncated_dirichlet_sum(double s, const Rational& beta, long long terms) {
  check_beta(beta);
  if (!(s > 1.0)) throw Error(ErrorKind::Domain, "truncated Dirichlet sum needs s > 1");
  if (terms < 1) throw Error(ErrorKind::Domain, "truncated Dirichlet sum needs N >= 1");
  const double b = to_double(beta);
  double sum = 0.0;
  // Smallest terms first.
  for (long long k = terms - 1; k >= 0; --k) sum += std::pow(static_cast<double>(k) + b, -s);
  return sum;
}

}  // namespace paraspec
