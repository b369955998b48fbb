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

#include "paraspec/config.hpp"

#include <string>
#include <string_view>

namespace paraspec {

/// Agreement thresholds used by the eta report.
inline constexpr double kEtaZetaAgreement = 1e-10;
inline constexpr double kEtaHeatAgreement = 1e-6;

/// Report document for one datum. Exact values are "p/q" strings and floats
/// are rounded to 15 significant digits, so the rendering is reproducible
/// byte for byte. Module errors propagate as paraspec::Error.
Json run_report(const ParabolicData& data, const RunConfig& config);

struct RunOutcome {
  std::string output;
  std::string error;
  int exit_code = 0;
};

/// Parses a document (single datum or batch), evaluates every entry in
/// input order and renders the result in the configured format. Never
/// throws for input-dependent failures; they become exit codes 2, 3 or 4.
RunOutcome run_document(std::string_view document, const RunConfig& config);

/// Rounds to 15 significant digits.
double round15(double x);

}  // namespace paraspec
