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

#include "paraspec/eta.hpp"

#include "paraspec/errors.hpp"
#include "paraspec/heat.hpp"
#include "paraspec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace paraspec {

namespace {

void check_offset(const Rational& offset) {
  if (offset <= -1 || offset >= 1)
    throw Error(ErrorKind::Domain, "offset " + to_string(offset) + " not in (-1,1)");
}

struct Term {
  std::string label;
  Rational offset;
  long long mult;
};

std::vector<Term> terms_at(const ParabolicData& data, std::size_t puncture, Bundle bundle) {
  require_valid(data);
  if (puncture >= data.flags.size())
    throw Error(ErrorKind::Domain, "puncture index " + std::to_string(puncture) + " out of range");
  const FlagData& flag = data.flags[puncture];
  std::vector<Term> terms;
  if (bundle == Bundle::E) {
    for (std::size_t j = 0; j < flag.levels(); ++j)
      terms.push_back({"level " + std::to_string(j + 1), flag.weights[j], flag.mults[j]});
  } else {
    // Signs are read off each ordered pair before any merging.
    for (std::size_t j = 0; j < flag.levels(); ++j)
      for (std::size_t l = 0; l < flag.levels(); ++l)
        if (j != l)
          terms.push_back({"pair (" + std::to_string(j + 1) + "," + std::to_string(l + 1) + ")",
                           flag.weights[j] - flag.weights[l],
                           static_cast<long long>(flag.mults[j]) * flag.mults[l]});
  }
  return terms;
}

}  // namespace

const char* eta_method_name(EtaMethod method) noexcept {
  switch (method) {
    case EtaMethod::Closed: return "closed";
    case EtaMethod::Zeta: return "zeta";
    case EtaMethod::Heat: return "heat";
  }
  return "closed";
}

Rational eta_closed_progression(const Rational& offset, long long mult) {
  check_offset(offset);
  if (offset == 0) return 0;
  return Rational(mult) * sign(offset) * (1 - 2 * abs(offset));
}

double eta_numeric_zeta(const Rational& offset, long long mult, const PrecisionPolicy& policy) {
  check_offset(offset);
  if (offset == 0) return 0.0;
  const Rational beta = abs(offset);
  const double difference = hurwitz_zeta(0.0, beta, policy) - hurwitz_zeta(0.0, 1 - beta, policy);
  return static_cast<double>(mult) * sign(offset) * difference;
}

double eta_numeric_heat(const Rational& offset, long long mult, const PrecisionPolicy& policy) {
  check_offset(offset);
  policy.check();
  if (offset == 0) return 0.0;
  const SpectrumFamily spec = SpectrumFamily::from_progressions({{offset, mult}});

  // Below t = 1e-3 the dual series is exp(-250)-small; above t_hi the
  // smallest eigenvalue has damped the integrand by exp(-50).
  const double gap = std::min(to_double(abs(offset)), 1.0 - to_double(abs(offset)));
  const double t_lo = 1e-3;
  const double t_hi = std::max(10.0, 50.0 / (4.0 * std::numbers::pi * std::numbers::pi * gap * gap));

  // dt = t du, so the integrand in u is t^{1/2} Tr(D e^{-tD^2}).
  const double integral = quad::log_trapezoid(
      [&](double u) {
        const double t = std::exp(u);
        return std::sqrt(t) * eta_heat_integrand(spec, t);
      },
      std::log(t_lo), std::log(t_hi), std::max(policy.target_abs_tol, 1e-13));
  return integral / std::sqrt(std::numbers::pi);
}

EtaResult eta_E(const ParabolicData& data, std::size_t puncture) {
  return eta_at_puncture(data, puncture, Bundle::E, EtaMethod::Closed);
}

EtaResult eta_End(const ParabolicData& data, std::size_t puncture) {
  EtaResult result = eta_at_puncture(data, puncture, Bundle::End, EtaMethod::Closed);
  if (*result.exact != 0)
    throw std::logic_error("endomorphism eta invariant failed to cancel pairwise");
  return result;
}

EtaResult eta_at_puncture(const ParabolicData& data, std::size_t puncture, Bundle bundle,
                          EtaMethod method, const PrecisionPolicy& policy) {
  EtaResult result;
  result.method = method;
  Rational exact_total = 0;
  for (const auto& term : terms_at(data, puncture, bundle)) {
    EtaContribution c{term.label, term.offset, term.mult, 0.0, std::nullopt};
    switch (method) {
      case EtaMethod::Closed:
        c.exact = eta_closed_progression(term.offset, term.mult);
        c.value = to_double(*c.exact);
        exact_total += *c.exact;
        break;
      case EtaMethod::Zeta:
        c.value = eta_numeric_zeta(term.offset, term.mult, policy);
        break;
      case EtaMethod::Heat:
        c.value = eta_numeric_heat(term.offset, term.mult, policy);
        break;
    }
    result.value += c.value;
    result.breakdown.push_back(std::move(c));
  }
  if (method == EtaMethod::Closed) {
    result.exact = exact_total;
    result.value = to_double(exact_total);
  }
  return result;
}

}  // namespace paraspec
