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

#include "paraspec/parabolic.hpp"

#include "paraspec/errors.hpp"

#include <numeric>

namespace paraspec {

int FlagData::total_rank() const noexcept {
  return std::accumulate(mults.begin(), mults.end(), 0);
}

int euler_characteristic(const PuncturedSurface& surface) noexcept {
  return 2 - 2 * surface.genus - surface.punctures;
}

Rational parabolic_degree(const ParabolicData& data) {
  Rational pardeg(data.degree);
  for (const auto& flag : data.flags) {
    const auto n = std::min(flag.weights.size(), flag.mults.size());
    for (std::size_t j = 0; j < n; ++j) pardeg += flag.weights[j] * flag.mults[j];
  }
  return pardeg;
}

Rational parabolic_slope(const ParabolicData& data) {
  if (data.rank < 1) throw Error(ErrorKind::Domain, "rank must be positive");
  return parabolic_degree(data) / data.rank;
}

void validate_flag(const FlagData& flag, int rank, const std::string& where,
                   std::vector<Violation>& out) {
  if (flag.weights.empty()) {
    out.push_back({"empty_flag", where + ": no weights"});
    return;
  }
  if (flag.weights.size() != flag.mults.size()) {
    out.push_back({"flag_length_mismatch",
                   where + ": weights and mults differ in length"});
    return;
  }
  for (std::size_t j = 0; j < flag.weights.size(); ++j) {
    const Rational& a = flag.weights[j];
    if (a < 0 || a >= 1)
      out.push_back({"weight_out_of_range",
                     where + ": weight " + to_string(a) + " not in [0,1)"});
    if (j > 0 && !(flag.weights[j - 1] < a))
      out.push_back({"weights_not_increasing",
                     where + ": weights not strictly increasing at level " +
                         std::to_string(j)});
    if (flag.mults[j] < 1)
      out.push_back({"mults_nonpositive",
                     where + ": multiplicity at level " + std::to_string(j) +
                         " is not positive"});
  }
  if (flag.total_rank() != rank)
    out.push_back({"flag_ranks", where + ": multiplicities sum to " +
                                     std::to_string(flag.total_rank()) +
                                     ", rank is " + std::to_string(rank)});
}

ValidationReport validate(const ParabolicData& data) {
  ValidationReport report;
  auto& v = report.violations;
  if (data.surface.genus < 0)
    v.push_back({"genus_negative", "genus must be nonnegative"});
  if (data.surface.punctures < 0)
    v.push_back({"punctures_negative", "puncture count must be nonnegative"});
  if (euler_characteristic(data.surface) >= 0)
    v.push_back({"euler_characteristic_nonnegative",
                 "2 - 2g - n = " + std::to_string(euler_characteristic(data.surface)) +
                     " is not negative"});
  if (static_cast<std::size_t>(std::max(data.surface.punctures, 0)) != data.flags.size())
    v.push_back({"puncture_count_mismatch",
                 "surface has " + std::to_string(data.surface.punctures) +
                     " punctures but " + std::to_string(data.flags.size()) +
                     " flags are given"});
  if (data.rank < 1) v.push_back({"rank_nonpositive", "rank must be positive"});
  for (std::size_t i = 0; i < data.flags.size(); ++i)
    validate_flag(data.flags[i], data.rank, "puncture " + std::to_string(i), v);

  report.pardeg_zero = parabolic_degree(data) == 0;
  if (!report.pardeg_zero) report.warnings.push_back("pardeg_nonzero");
  return report;
}

void require_valid(const ParabolicData& data) {
  const auto report = validate(data);
  if (report.admissible()) return;
  std::string msg = "inadmissible parabolic data:";
  for (const auto& violation : report.violations) msg += " [" + violation.detail + "]";
  throw Error(ErrorKind::Domain, msg);
}

Rational flag_correction_dimension(const FlagData& flag, int rank) {
  Integer squares = 0;
  for (int k : flag.mults) squares += Integer(k) * k;
  return Rational(Integer(rank) * rank - squares, 2);
}

}  // namespace paraspec
