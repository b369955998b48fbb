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

#include "paraspec/parabolic.hpp"
#include "paraspec/rational.hpp"
#include "paraspec/specfun.hpp"
#include "paraspec/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace paraspec {

enum class EtaMethod { Closed, Zeta, Heat };

const char* eta_method_name(EtaMethod method) noexcept;

/// Contribution of one weight level (E) or one ordered pair of levels (End).
struct EtaContribution {
  std::string label;
  Rational offset;
  long long multiplicity = 0;
  double value = 0.0;
  std::optional<Rational> exact;
};

struct EtaResult {
  EtaMethod method = EtaMethod::Closed;
  /// Present for the closed form.
  std::optional<Rational> exact;
  double value = 0.0;
  std::vector<EtaContribution> breakdown;
};

/// mult * sign(offset) * (1 - 2|offset|), and 0 for offset 0.
Rational eta_closed_progression(const Rational& offset, long long mult);

/// Same quantity through the Euler-Maclaurin continuation of
/// zeta_H(s,|d|) - zeta_H(s,1-|d|) at s = 0.
double eta_numeric_zeta(const Rational& offset, long long mult,
                        const PrecisionPolicy& policy = {});

/// Same quantity as pi^{-1/2} int_0^inf t^{-1/2} Tr(D exp(-t D^2)) dt.
double eta_numeric_heat(const Rational& offset, long long mult,
                        const PrecisionPolicy& policy = {});

/// Closed form at one puncture, summed over nonzero weights.
EtaResult eta_E(const ParabolicData& data, std::size_t puncture);

/// Closed form at one puncture, summed over ordered pairs j != l. Vanishes
/// identically; a nonzero sum is a logic error.
EtaResult eta_End(const ParabolicData& data, std::size_t puncture);

/// Per-level (E) or per-ordered-pair (End) evaluation by any method.
EtaResult eta_at_puncture(const ParabolicData& data, std::size_t puncture, Bundle bundle,
                          EtaMethod method, const PrecisionPolicy& policy = {});

}  // namespace paraspec
