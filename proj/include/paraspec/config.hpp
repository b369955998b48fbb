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
#include "paraspec/spectrum.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paraspec {

using Json = nlohmann::ordered_json;

enum class Command { Validate, Spectrum, Eta, Index, Dimension, Curvature, Heat, DetModel };
enum class OutputFormat { Json, Csv, Text };

const char* command_name(Command command) noexcept;
const char* format_name(OutputFormat format) noexcept;

/// Logarithmically spaced t values.
struct TGrid {
  double start = 1e-4;
  double stop = 10.0;
  int points = 40;

  std::vector<double> values() const;
};

struct RunConfig {
  Command command = Command::Validate;
  OutputFormat format = OutputFormat::Json;
  Bundle bundle = Bundle::E;
  double window = 4.0 * 3.14159265358979323846;
  int degree_cap = 2;
  std::optional<double> tol;
  TGrid t_grid;
};

/// One datum, or a batch when the document's top level is an array.
struct ParsedDocument {
  std::vector<ParabolicData> entries;
  std::vector<std::string> labels;
  bool batch = false;
};

/// Parses the input schema
///   {"genus": int, "rank": int, "degree": int,
///    "punctures": [{"weights": ["p/q", ...], "mults": [int, ...]}, ...]}
/// with an optional "label" string. Throws SchemaError (with a JSON pointer)
/// for shape, ordering, range and flag-rank violations, and
/// Error(RationalParse) for malformed weights.
ParsedDocument parse_document(std::string_view text);

ParabolicData parse_datum(const Json& node, const std::string& pointer);

/// Normal form of a datum: weights as canonical "p/q" strings.
Json serialize(const ParabolicData& data);

/// Run options as produced by the command-line front end:
///   {"command": "...", "format": "...", "bundle": "E|End", "window": x,
///    "degree_cap": n, "tol": x, "t_grid": "START:STOP:POINTS"}
/// Only "command" is required. Throws SchemaError on bad values.
RunConfig parse_run_options(std::string_view text);

TGrid parse_t_grid(std::string_view text);

}  // namespace paraspec
