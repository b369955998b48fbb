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

#include "paraspec/heat.hpp"

#include "paraspec/errors.hpp"
#include "paraspec/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace paraspec {

namespace {

constexpr double kPi = std::numbers::pi;
// exp(-46) ~ 1e-20: series terms below this (relative to the leading term)
// are dropped.
constexpr double kTailExponent = 46.0;

// Distance from n * offset to the nearest integer, signed; keeps the phase
// of cos/sin accurate for large n.
double reduced_phase(long long n, double offset) {
  const double x = static_cast<double>(n) * offset;
  return x - std::round(x);
}

double theta_direct(double offset, double t) {
  const double a = 4.0 * kPi * kPi * t;
  const auto reach = static_cast<long long>(std::ceil(std::sqrt(kTailExponent / a))) + 2;
  double sum = 0.0;
  for (long long m = -reach; m <= reach; ++m) {
    const double x = static_cast<double>(m) + offset;
    sum += std::exp(-a * x * x);
  }
  return sum;
}

double theta_dual(double offset, double t) {
  const auto reach = static_cast<long long>(std::ceil(std::sqrt(4.0 * t * kTailExponent))) + 2;
  double sum = 0.0;
  for (long long n = reach; n >= 1; --n)
    sum += std::exp(-static_cast<double>(n * n) / (4.0 * t)) *
           std::cos(2.0 * kPi * reduced_phase(n, offset));
  return (1.0 + 2.0 * sum) / std::sqrt(4.0 * kPi * t);
}

// The lattices Z and Z + 1/2 are symmetric under x -> -x, so their odd
// sums vanish identically.
bool symmetric_lattice(double offset) { return offset == 0.0 || std::abs(offset) == 0.5; }

double odd_theta_direct(double offset, double t) {
  if (symmetric_lattice(offset)) return 0.0;
  const double a = 4.0 * kPi * kPi * t;
  const auto reach = static_cast<long long>(std::ceil(std::sqrt(kTailExponent / a))) + 2;
  double sum = 0.0;
  for (long long m = -reach; m <= reach; ++m) {
    const double x = static_cast<double>(m) + offset;
    sum += 2.0 * kPi * x * std::exp(-a * x * x);
  }
  return sum;
}

// Poisson transform of sum_m 2 pi (m + d) exp(-4 pi^2 t (m + d)^2).
double odd_theta_dual(double offset, double t) {
  if (symmetric_lattice(offset)) return 0.0;
  const auto reach = static_cast<long long>(std::ceil(std::sqrt(4.0 * t * kTailExponent))) + 2;
  double sum = 0.0;
  for (long long n = reach; n >= 1; --n)
    sum += static_cast<double>(n) * std::exp(-static_cast<double>(n * n) / (4.0 * t)) *
           std::sin(2.0 * kPi * reduced_phase(n, offset));
  return sum / (2.0 * std::sqrt(kPi) * t * std::sqrt(t));
}

template <class Kernel>
double over_progressions(const SpectrumFamily& spec, double t, Kernel kernel) {
  if (!(t > 0) || !std::isfinite(t)) throw Error(ErrorKind::Domain, "t must be positive and finite");
  double total = 0.0;
  for (const auto& p : spec.progressions())
    total += static_cast<double>(p.multiplicity) * kernel(to_double(p.offset), t);
  return total;
}

}  // namespace

double heat_trace_direct(const SpectrumFamily& spec, double t) {
  return over_progressions(spec, t, theta_direct);
}

double heat_trace_dual(const SpectrumFamily& spec, double t) {
  return over_progressions(spec, t, theta_dual);
}

double heat_trace_vertical(const SpectrumFamily& spec, double t) {
  return t >= kPoissonSwitch ? heat_trace_direct(spec, t) : heat_trace_dual(spec, t);
}

double eta_heat_integrand_direct(const SpectrumFamily& spec, double t) {
  return over_progressions(spec, t, odd_theta_direct);
}

double eta_heat_integrand_dual(const SpectrumFamily& spec, double t) {
  return over_progressions(spec, t, odd_theta_dual);
}

double eta_heat_integrand(const SpectrumFamily& spec, double t) {
  return t >= kPoissonSwitch ? eta_heat_integrand_direct(spec, t)
                             : eta_heat_integrand_dual(spec, t);
}

// ---------------------------------------------------------------------------

void AsymptoticExpansion::add(double coefficient, int half_power, int log_power) {
  if (log_power < 0 || log_power > 1)
    throw Error(ErrorKind::Domain, "log powers are limited to 0 and 1");
  terms_[{half_power, log_power}] += coefficient;
}

double AsymptoticExpansion::coefficient(int half_power, int log_power) const {
  const auto it = terms_.find({half_power, log_power});
  return it == terms_.end() ? 0.0 : it->second;
}

double AsymptoticExpansion::evaluate(double t) const {
  const double log_t = std::log(t);
  double sum = 0.0;
  for (const auto& [key, c] : terms_) {
    const double power = std::pow(t, 0.5 * key.first);
    sum += c * power * (key.second == 1 ? log_t : 1.0);
  }
  return sum;
}

std::vector<AsymptoticTerm> AsymptoticExpansion::terms() const {
  std::vector<AsymptoticTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
  return out;
}

double AsymptoticExpansion::max_log_coefficient() const {
  double worst = 0.0;
  for (const auto& [key, c] : terms_)
    if (key.second == 1) worst = std::max(worst, std::abs(c));
  return worst;
}

// ---------------------------------------------------------------------------

double renormalized_integral(const std::function<double(double)>& f,
                             const std::vector<PowerTerm>& model, double upper) {
  if (!(upper > 0) || !std::isfinite(upper))
    throw Error(ErrorKind::Domain, "upper limit must be positive and finite");

  auto model_at = [&](double x) {
    double m = 0.0;
    for (const auto& term : model) m += term.coefficient * std::pow(x, term.exponent);
    return m;
  };
  auto remainder = [&](double x) { return f(x) - model_at(x); };

  // Finite parts of the model itself over [eps, upper].
  double finite = 0.0;
  bool divergent_model = false;
  for (const auto& term : model) {
    if (term.exponent == -1.0) {
      finite += term.coefficient * std::log(upper);
    } else {
      finite += term.coefficient * std::pow(upper, term.exponent + 1.0) / (term.exponent + 1.0);
    }
    if (term.exponent <= -1.0 && term.coefficient != 0.0) divergent_model = true;
  }

  // Where subtracting the model loses everything to rounding, stop: the
  // cancellation noise eps * x * |model(x)| must stay below 1e-11.
  double cutoff = upper * 1e-12;
  if (divergent_model) {
    auto noise = [&](double x) {
      double m = 0.0;
      for (const auto& term : model) m += std::abs(term.coefficient) * std::pow(x, term.exponent);
      return std::numeric_limits<double>::epsilon() * x * m;
    };
    cutoff = upper;
    while (cutoff > upper * 1e-300 && noise(0.5 * cutoff) <= 1e-11) cutoff *= 0.5;
  }

  // x * r(x) must tend to zero for r to be integrable.
  const double near = std::abs(cutoff * remainder(cutoff));
  const double farther = std::abs(4.0 * cutoff * remainder(4.0 * cutoff));
  if (!std::isfinite(near) || (near > 1e-3 && near > 0.5 * farther))
    throw Error(ErrorKind::UndeclaredDivergence,
                "density minus declared model is not integrable at 0");

  if (!divergent_model) {
    return quad::endpoint_singular(remainder, 0.0, upper) + finite;
  }

  const double body = quad::smooth(
      [&](double u) {
        const double x = std::exp(u);
        return remainder(x) * x;
      },
      std::log(cutoff), std::log(upper), 1e-13);

  // Integral over (0, cutoff], taking r ~ c x^b locally.
  const double r1 = remainder(cutoff);
  const double r2 = remainder(2.0 * cutoff);
  double tail = cutoff * r1;
  if (r1 != 0.0 && r2 != 0.0 && (r1 > 0) == (r2 > 0)) {
    const double b = std::log2(r2 / r1);
    if (b > -1.0 && b < 8.0) tail = cutoff * r1 / (b + 1.0);
  }
  return body + tail + finite;
}

// ---------------------------------------------------------------------------

void SyntheticKernel::check() const {
  if (!(epsilon > 0 && epsilon < 1)) throw Error(ErrorKind::Domain, "epsilon must lie in (0,1)");
  if (n_model < 1 || h_model < 0) throw Error(ErrorKind::Domain, "invalid model dimensions");
  for (const auto& [kl, a] : coefficients) {
    const auto [k, l] = kl;
    const bool ok = corner == Corner::Face01_11 ? (k >= -n_model && l >= -h_model - 2)
                                                : (k >= -1 && l >= -h_model - 1);
    if (!ok)
      throw Error(ErrorKind::Domain, "coefficient index (" + std::to_string(k) + "," +
                                         std::to_string(l) + ") outside the face's range");
  }
}

double SyntheticKernel::slice_density(double C, double x) const {
  double sum = 0.0;
  for (const auto& [kl, a] : coefficients) {
    const auto [k, l] = kl;
    if (corner == Corner::Face01_11) {
      sum += a * std::pow(C, k) * std::pow(x, l - k);
    } else {
      sum += a * std::pow(C, l - k - 1) * std::pow(x, k);
    }
  }
  return sum;
}

AsymptoticExpansion corner_asymptotics(const SyntheticKernel& kernel, bool renormalize) {
  kernel.check();
  const double eps = kernel.epsilon;
  const double log_eps = std::log(eps);
  AsymptoticExpansion out;
  for (const auto& [kl, a] : kernel.coefficients) {
    const auto [k, l] = kl;
    if (kernel.corner == Corner::Face01_11) {
      // a C^k int_{C/eps}^{eps} x^{l-k} dx
      const int m = l - k + 1;
      if (m != 0) {
        out.add(a * std::pow(eps, m) / m, k);
        out.add(-a * std::pow(eps, -m) / m, l + 1);
      } else {
        // -a C^k log(C / eps^2), with log C = (1/2) log t.
        out.add(2.0 * a * log_eps, k);
        out.add(-0.5 * a, k, 1);
      }
    } else {
      // a C^{l-k-1} FP_{z=0} int_0^{C eps} x^{k+z} dx
      if (k != -1) {
        out.add(a * std::pow(eps, k + 1) / (k + 1), l);
      } else {
        if (!renormalize)
          throw Error(ErrorKind::Domain,
                      "k = -1 term at the 10-11 corner needs renormalization");
        out.add(a * log_eps, l);
        out.add(0.5 * a, l, 1);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

FitResult fit_small_time_expansion(const std::vector<Sample>& samples,
                                   const std::vector<std::pair<int, int>>& exponents,
                                   double max_condition) {
  const auto rows = static_cast<Eigen::Index>(samples.size());
  const auto cols = static_cast<Eigen::Index>(exponents.size());
  if (cols == 0) throw Error(ErrorKind::Domain, "empty template");
  if (rows < 2 * cols)
    throw Error(ErrorKind::Domain, "need at least twice as many samples as template terms");
  for (const auto& [p, q] : exponents)
    if (q < 0 || q > 1) throw Error(ErrorKind::Domain, "log powers are limited to 0 and 1");
  double t_min = std::numeric_limits<double>::infinity(), t_max = 0.0;
  for (const auto& s : samples) {
    if (!(s.t > 0) || !std::isfinite(s.value))
      throw Error(ErrorKind::Domain, "samples need t > 0 and finite values");
    t_min = std::min(t_min, s.t);
    t_max = std::max(t_max, s.t);
  }
  if (t_max / t_min < 100.0) throw Error(ErrorKind::Domain, "samples must span two decades in t");

  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double t = samples[static_cast<std::size_t>(i)].t;
    for (Eigen::Index j = 0; j < cols; ++j) {
      const auto [p, q] = exponents[static_cast<std::size_t>(j)];
      design(i, j) = std::pow(t, 0.5 * p) * (q == 1 ? std::log(t) : 1.0);
    }
    rhs(i) = samples[static_cast<std::size_t>(i)].value;
  }
  const Eigen::VectorXd scale = design.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < cols; ++j) {
    if (scale(j) == 0) throw Error(ErrorKind::IllConditioned, "zero template column");
    design.col(j) /= scale(j);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double condition = sv(0) / sv(sv.size() - 1);
  if (!(condition <= max_condition))
    throw Error(ErrorKind::IllConditioned, "design matrix condition number too large");

  const Eigen::VectorXd scaled = svd.solve(rhs);
  FitResult result;
  result.condition = condition;
  for (Eigen::Index j = 0; j < cols; ++j) {
    const auto [p, q] = exponents[static_cast<std::size_t>(j)];
    result.expansion.add(scaled(j) / scale(j), p, q);
  }
  const Eigen::VectorXd residual = design * scaled - rhs;
  result.residual_rms = std::sqrt(residual.squaredNorm() / static_cast<double>(rows));
  return result;
}

double log_det_model_vertical(const Rational& offset, long long mult,
                              const PrecisionPolicy& policy) {
  if (offset == 0) throw Error(ErrorKind::ZeroMode, "offset 0 carries a zero mode");
  if (offset <= -1 || offset >= 1) throw Error(ErrorKind::Domain, "offset must lie in (-1,1)");
  if (mult < 1) throw Error(ErrorKind::Domain, "multiplicity must be positive");
  // zeta_L(s) = (2 pi)^{-2s} (zeta_H(2s, b) + zeta_H(2s, 1 - b)), b = |offset|.
  const Rational beta = abs(offset);
  const Rational complement = 1 - beta;
  const double at_zero = to_double(hurwitz_zeta_at_zero(beta) + hurwitz_zeta_at_zero(complement));
  const double slope = hurwitz_zeta_deriv_at_zero(beta, policy) +
                       hurwitz_zeta_deriv_at_zero(complement, policy);
  const double zeta_prime = -2.0 * std::log(2.0 * kPi) * at_zero + 2.0 * slope;
  return -static_cast<double>(mult) * zeta_prime;
}

}  // namespace paraspec
