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

#include <initializer_list>
#include <string>
#include <vector>

namespace testing_support {

inline paraspec::Rational R(const char* text) { return paraspec::parse_rational(text); }

inline paraspec::FlagData flag(std::initializer_list<const char*> weights,
                               std::initializer_list<int> mults) {
  paraspec::FlagData f;
  for (const char* w : weights) f.weights.push_back(R(w));
  f.mults.assign(mults.begin(), mults.end());
  return f;
}

inline paraspec::ParabolicData datum(int genus, int rank, long long degree,
                                     std::vector<paraspec::FlagData> flags) {
  paraspec::ParabolicData d;
  d.surface.genus = genus;
  d.surface.punctures = static_cast<int>(flags.size());
  d.rank = rank;
  d.degree = degree;
  d.flags = std::move(flags);
  return d;
}

// The worked example: genus 2, one puncture, rank 2, full flag {1/4, 3/4}.
inline paraspec::ParabolicData worked_example() {
  return datum(2, 2, -1, {flag({"1/4", "3/4"}, {1, 1})});
}

}  // namespace testing_support
