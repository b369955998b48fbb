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

#include <stdexcept>
#include <string>

namespace paraspec {

enum class ErrorKind {
  Schema,
  RationalParse,
  PoleAtOne,
  Domain,
  NonConvergence,
  ZeroWeightPresent,
  NegativeDimension,
  NotDegreeZero,
  ZeroMode,
  TruncationMismatch,
  SymbolicResidue,
  UndeclaredDivergence,
  IllConditioned,
};

/// Process exit code for an error class: 2 configuration, 3 numerical,
/// 4 mathematical precondition.
int exit_code(ErrorKind kind) noexcept;

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Schema violation located by a JSON pointer into the input document.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(ErrorKind::Schema, pointer + ": " + what),
        pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace paraspec
