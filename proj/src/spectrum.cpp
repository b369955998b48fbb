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

#include "paraspec/spectrum.hpp"

#include "paraspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace paraspec {

const char* bundle_name(Bundle bundle) noexcept {
  return bundle == Bundle::E ? "E" : "End";
}

SpectrumFamily SpectrumFamily::from_progressions(std::vector<Progression> progressions) {
  std::map<Rational, long long> merged;
  for (auto& p : progressions) {
    if (p.offset <= -1 || p.offset >= 1)
      throw Error(ErrorKind::Domain, "offset " + to_string(p.offset) + " not in (-1,1)");
    if (p.multiplicity < 1) throw Error(ErrorKind::Domain, "multiplicity must be positive");
    merged[p.offset] += p.multiplicity;
  }
  SpectrumFamily out;
  out.progressions_.reserve(merged.size());
  for (auto& [offset, mult] : merged) out.progressions_.push_back({offset, mult});
  return out;
}

long long SpectrumFamily::total_multiplicity() const noexcept {
  long long total = 0;
  for (const auto& p : progressions_) total += p.multiplicity;
  return total;
}

SpectrumFamily vertical_spectrum_E(const FlagData& flag) {
  std::vector<Progression> parts;
  for (std::size_t j = 0; j < flag.levels(); ++j)
    parts.push_back({flag.weights[j], flag.mults[j]});
  return SpectrumFamily::from_progressions(std::move(parts));
}

SpectrumFamily vertical_spectrum_End(const FlagData& flag) {
  // Weights lie in [0,1), so a_j - a_l is already in (-1,1).
  std::vector<Progression> parts;
  for (std::size_t j = 0; j < flag.levels(); ++j)
    for (std::size_t l = 0; l < flag.levels(); ++l)
      parts.push_back({flag.weights[j] - flag.weights[l],
                       static_cast<long long>(flag.mults[j]) * flag.mults[l]});
  return SpectrumFamily::from_progressions(std::move(parts));
}

SpectrumFamily vertical_spectrum(const FlagData& flag, Bundle bundle) {
  return bundle == Bundle::E ? vertical_spectrum_E(flag) : vertical_spectrum_End(flag);
}

SpectrumFamily merge_spectra(const std::vector<SpectrumFamily>& parts) {
  std::vector<Progression> all;
  for (const auto& part : parts)
    all.insert(all.end(), part.progressions().begin(), part.progressions().end());
  return SpectrumFamily::from_progressions(std::move(all));
}

std::vector<Eigenvalue> eigenvalues_in_window(const SpectrumFamily& spec, double bound) {
  if (!(bound > 0) || !std::isfinite(bound))
    throw Error(ErrorKind::Domain, "window bound must be positive and finite");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double reach = bound / two_pi;

  std::map<Rational, long long> found;
  for (const auto& p : spec.progressions()) {
    const double offset = to_double(p.offset);
    const auto lo = static_cast<long long>(std::floor(-reach - offset)) - 1;
    const auto hi = static_cast<long long>(std::ceil(reach - offset)) + 1;
    for (long long m = lo; m <= hi; ++m) {
      const Rational position = p.offset + m;
      if (std::abs(two_pi * to_double(position)) <= bound) found[position] += p.multiplicity;
    }
  }
  std::vector<Eigenvalue> out;
  out.reserve(found.size());
  for (auto& [position, mult] : found)
    out.push_back({position, two_pi * to_double(position), mult});
  return out;
}

long long vertical_kernel_rank(const SpectrumFamily& spec) noexcept {
  for (const auto& p : spec.progressions())
    if (p.offset == 0) return p.multiplicity;
  return 0;
}

FredholmReport fredholm_classify(const ParabolicData& data, Bundle bundle) {
  require_valid(data);
  FredholmReport report;
  report.reasons.push_back("horizontal_operator_invertible");
  for (std::size_t i = 0; i < data.flags.size(); ++i) {
    const long long rank = vertical_kernel_rank(vertical_spectrum(data.flags[i], bundle));
    report.vertical_kernel_rank_per_puncture.push_back(rank);
    if (rank > 0) {
      report.discrete_spectrum = false;
      report.reasons.push_back("vertical_kernel:puncture=" + std::to_string(i) +
                               ",rank=" + std::to_string(rank));
    }
  }
  if (report.discrete_spectrum)
    report.reasons.push_back("vertical_family_invertible");
  else
    report.reasons.push_back("continuous_bands_from_horizontal_spectrum:-1/2,+1/2(unscaled)");
  return report;
}

}  // namespace paraspec
