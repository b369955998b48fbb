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

#include <string>
#include <vector>

namespace paraspec {

/// Surface of genus g with n punctures. Admissible surfaces are hyperbolic:
/// 2 - 2g - n < 0.
struct PuncturedSurface {
  int genus = 0;
  int punctures = 0;
};

/// Weighted flag at one puncture: weights 0 <= a_1 < ... < a_r < 1 with the
/// multiplicity (dimension drop) of each step.
struct FlagData {
  std::vector<Rational> weights;
  std::vector<int> mults;

  std::size_t levels() const noexcept { return weights.size(); }
  int total_rank() const noexcept;
};

/// The input object: topology, rank, degree of the compactified bundle and
/// one flag per puncture (surface.punctures == flags.size()).
struct ParabolicData {
  PuncturedSurface surface;
  int rank = 1;
  long long degree = 0;
  std::vector<FlagData> flags;
};

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;
  bool pardeg_zero = false;

  bool admissible() const noexcept { return violations.empty(); }
};

int euler_characteristic(const PuncturedSurface& surface) noexcept;

/// deg + sum over punctures and levels of weight * multiplicity.
Rational parabolic_degree(const ParabolicData& data);

Rational parabolic_slope(const ParabolicData& data);

/// Shape checks only; stability is not decidable from weight data.
ValidationReport validate(const ParabolicData& data);

/// Checks a single flag against a rank; appends violations prefixed with
/// `where`.
void validate_flag(const FlagData& flag, int rank, const std::string& where,
                   std::vector<Violation>& out);

/// Throws Error(Domain) listing the violations when the datum is not
/// admissible.
void require_valid(const ParabolicData& data);

/// Complex dimension (k^2 - sum k_j^2)/2 of the partial flag variety cut out
/// by the multiplicities.
Rational flag_correction_dimension(const FlagData& flag, int rank);

}  // namespace paraspec
