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

#include "paraspec/rational.hpp"
#include "paraspec/specfun.hpp"
#include "paraspec/spectrum.hpp"

#include <functional>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

namespace paraspec {

// ---------------------------------------------------------------------------
// Theta sums over the vertical spectra
// ---------------------------------------------------------------------------

/// Below this time the Poisson-dual series is used.
inline constexpr double kPoissonSwitch = 1.0 / (4.0 * std::numbers::pi);

/// Tr exp(-t D^2) = sum mult * sum_m exp(-4 pi^2 t (m + offset)^2).
double heat_trace_vertical(const SpectrumFamily& spec, double t);
double heat_trace_direct(const SpectrumFamily& spec, double t);
/// (4 pi t)^{-1/2} sum_n exp(-n^2 / 4t) cos(2 pi n offset), per progression.
double heat_trace_dual(const SpectrumFamily& spec, double t);

/// Tr D exp(-t D^2) = sum mult * sum_m 2 pi (m + offset) exp(-4 pi^2 t (m + offset)^2).
double eta_heat_integrand(const SpectrumFamily& spec, double t);
double eta_heat_integrand_direct(const SpectrumFamily& spec, double t);
double eta_heat_integrand_dual(const SpectrumFamily& spec, double t);

// ---------------------------------------------------------------------------
// Asymptotic expansions
// ---------------------------------------------------------------------------

/// c * t^(half_power/2) * (log t)^log_power.
struct AsymptoticTerm {
  double coefficient = 0.0;
  int half_power = 0;
  int log_power = 0;
};

/// Finite sum of AsymptoticTerm with distinct (half_power, log_power) and
/// log_power in {0, 1}.
class AsymptoticExpansion {
 public:
  /// Accumulates into an existing (p, q) slot. Throws Error(Domain) for
  /// log_power outside {0, 1}.
  void add(double coefficient, int half_power, int log_power = 0);

  double coefficient(int half_power, int log_power = 0) const;
  double evaluate(double t) const;

  /// Terms in (half_power, log_power) order.
  std::vector<AsymptoticTerm> terms() const;

  /// Largest |coefficient| among the log t terms (0 if none).
  double max_log_coefficient() const;

 private:
  std::map<std::pair<int, int>, double> terms_;
};

// ---------------------------------------------------------------------------
// Finite-part integrals
// ---------------------------------------------------------------------------

/// c * x^exponent in the declared small-x behaviour of a density.
struct PowerTerm {
  double coefficient = 0.0;
  double exponent = 0.0;
};

/// FP_{eps -> 0} of the integral of f over [eps, upper]: the divergent
/// pieces c eps^(a+1)/(a+1) (a < -1) and -c log eps (a = -1) of the declared
/// model are dropped. Throws Error(UndeclaredDivergence) when f minus the model
/// is still non-integrable at 0.
double renormalized_integral(const std::function<double(double)>& f,
                             const std::vector<PowerTerm>& model, double upper = 1.0);

// ---------------------------------------------------------------------------
// Corner contributions to renormalized heat traces
// ---------------------------------------------------------------------------

enum class Corner {
  /// Coefficients a_{kl} of rho_01^k x^l; slice x in [C/eps, eps].
  Face01_11,
  /// Coefficients a_{kl} of rho_10^k rho_11^l; slice x in (0, C eps],
  /// renormalized with x^z.
  Face10_11,
};

/// Model density near one corner of the heat space diagonal, with the
/// boundary-face exponent ranges of a cusp heat kernel.
struct SyntheticKernel {
  Corner corner = Corner::Face01_11;
  /// (k, l) -> a_{kl}; finitely many entries.
  std::map<std::pair<int, int>, double> coefficients;
  int n_model = 2;
  int h_model = 0;
  double epsilon = 0.5;

  /// Throws Error(Domain) if an index is below its face's lower bound or
  /// epsilon is not in (0, 1).
  void check() const;

  /// Slice density at fixed C = sqrt(t), as a function of x.
  double slice_density(double C, double x) const;
};

/// Exact expansion in t = C^2 of the slice integral over the corner region.
/// With `renormalize` the 10-11 integral is taken as FP_{z=0} of the x^z
/// regularization; without it a k = -1 term is an error.
AsymptoticExpansion corner_asymptotics(const SyntheticKernel& kernel, bool renormalize = true);

// ---------------------------------------------------------------------------
// Fitting and model determinants
// ---------------------------------------------------------------------------

struct Sample {
  double t = 0.0;
  double value = 0.0;
};

struct FitResult {
  AsymptoticExpansion expansion;
  double residual_rms = 0.0;
  double condition = 0.0;
};

/// Least squares for sum_j c_j t^(p_j/2) (log t)^(q_j) over the template
/// (p_j, q_j). Needs at least twice as many samples as template terms over a
/// t-range of two decades or more.
FitResult fit_small_time_expansion(const std::vector<Sample>& samples,
                                   const std::vector<std::pair<int, int>>& exponents,
                                   double max_condition = 1e12);

/// -zeta'(0) for the model Laplacian with spectrum 4 pi^2 (m + offset)^2,
/// repeated mult times. Throws Error(ZeroMode) for offset 0.
double log_det_model_vertical(const Rational& offset, long long mult,
                              const PrecisionPolicy& policy = {});

}  // namespace paraspec
