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

#include "paraspec/errors.hpp"

namespace paraspec {

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Schema:
    case ErrorKind::RationalParse:
      return 2;
    case ErrorKind::NonConvergence:
    case ErrorKind::UndeclaredDivergence:
    case ErrorKind::IllConditioned:
      return 3;
    default:
      return 4;
  }
}

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::RationalParse: return "RationalParseError";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ZeroWeightPresent: return "ZeroWeightPresent";
    case ErrorKind::NegativeDimension: return "NegativeDimension";
    case ErrorKind::NotDegreeZero: return "NotDegreeZero";
    case ErrorKind::ZeroMode: return "ZeroMode";
    case ErrorKind::TruncationMismatch: return "TruncationMismatch";
    case ErrorKind::SymbolicResidue: return "SymbolicResidue";
    case ErrorKind::UndeclaredDivergence: return "UndeclaredDivergence";
    case ErrorKind::IllConditioned: return "IllConditioned";
  }
  return "Error";
}

}  // namespace paraspec
