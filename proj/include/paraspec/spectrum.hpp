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

#include <string>
#include <vector>

namespace paraspec {

/// Which boundary family: the bundle E itself or End(E) = E (x) E*.
enum class Bundle { E, End };

const char* bundle_name(Bundle bundle) noexcept;

/// One arithmetic progression 2 pi (offset + Z), repeated `multiplicity`
/// times.
struct Progression {
  Rational offset;
  long long multiplicity = 0;

  friend bool operator==(const Progression&, const Progression&) = default;
};

/// Finite union of progressions with pairwise distinct offsets in (-1,1),
/// sorted by offset. The 2 pi scale stays symbolic until eigenvalues are
/// realized as doubles.
class SpectrumFamily {
 public:
  SpectrumFamily() = default;

  /// Merges equal offsets by summing multiplicities. Offsets must lie in
  /// (-1,1) and multiplicities must be positive; throws Error(Domain)
  /// otherwise.
  static SpectrumFamily from_progressions(std::vector<Progression> progressions);

  const std::vector<Progression>& progressions() const noexcept { return progressions_; }
  long long total_multiplicity() const noexcept;
  bool empty() const noexcept { return progressions_.empty(); }

  friend bool operator==(const SpectrumFamily&, const SpectrumFamily&) = default;

 private:
  std::vector<Progression> progressions_;
};

/// Eigenvalue 2 pi * position with position = offset + m exact.
struct Eigenvalue {
  Rational position;
  double value = 0.0;
  long long multiplicity = 0;
};

/// Per weight level: offset a_j with multiplicity k_j.
SpectrumFamily vertical_spectrum_E(const FlagData& flag);

/// Per ordered pair (j,l): offset a_j - a_l in (-1,1) with multiplicity
/// k_j k_l.
SpectrumFamily vertical_spectrum_End(const FlagData& flag);

SpectrumFamily vertical_spectrum(const FlagData& flag, Bundle bundle);

/// Union of several families (e.g. all punctures), offsets merged.
SpectrumFamily merge_spectra(const std::vector<SpectrumFamily>& parts);

/// All eigenvalues with |2 pi (offset + m)| <= bound, ascending. Progressions
/// that produce the same exact eigenvalue are merged.
std::vector<Eigenvalue> eigenvalues_in_window(const SpectrumFamily& spec, double bound);

/// Multiplicity of the zero offset (dimension of the vertical kernel).
long long vertical_kernel_rank(const SpectrumFamily& spec) noexcept;

struct FredholmReport {
  bool fredholm = true;
  bool discrete_spectrum = true;
  std::vector<long long> vertical_kernel_rank_per_puncture;
  bool horizontal_invertible = true;
  std::vector<std::string> reasons;
};

/// The horizontal operator acts on the vertical kernel as the constant
/// -(i/2) c(du); its spectrum datum is this constant, unscaled by 2 pi.
inline Rational horizontal_spectrum_datum() { return Rational(-1, 2); }

FredholmReport fredholm_classify(const ParabolicData& data, Bundle bundle);

}  // namespace paraspec
