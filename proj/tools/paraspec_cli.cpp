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

// Command-line front end. Reads a JSON document, forwards it with the run
// options to the C library and writes the rendered report to stdout.

#include "paraspec/paraspec.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral invariants of parabolic weight data"};
  app.set_version_flag("--version", std::string(paraspec_version()));

  std::string input;
  std::string command;
  std::string format = "json";
  std::string bundle = "E";
  std::optional<double> window;
  std::optional<int> degree_cap;
  std::optional<double> tol;
  std::optional<std::string> t_grid;

  app.add_option("--input", input, "JSON document path, or - for stdin")->required();
  app.add_option("--command", command, "validate|spectrum|eta|index|dimension|curvature|heat|detmodel")
      ->required();
  app.add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--bundle", bundle, "E|End")->check(CLI::IsMember({"E", "End"}));
  app.add_option("--window", window, "eigenvalue window bound");
  app.add_option("--degree-cap", degree_cap, "truncation degree of the graded classes");
  app.add_option("--tol", tol, "absolute tolerance for numerical routes");
  app.add_option("--t-grid", t_grid, "START:STOP:POINTS, log spaced");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : PARASPEC_SCHEMA;
  }

  const std::optional<std::string> document = read_input(input);
  if (!document) {
    std::cerr << "error: cannot read input '" << input << "'\n";
    return PARASPEC_SCHEMA;
  }

  nlohmann::ordered_json options;
  options["command"] = command;
  options["format"] = format;
  options["bundle"] = bundle;
  if (window) options["window"] = *window;
  if (degree_cap) options["degree_cap"] = *degree_cap;
  if (tol) options["tol"] = *tol;
  if (t_grid) options["t_grid"] = *t_grid;

  char* out = nullptr;
  char* err = nullptr;
  const paraspec_status status = paraspec_run(document->c_str(), options.dump().c_str(), &out, &err);
  if (out) std::cout << out;
  if (err) std::cerr << "error: " << err << "\n";
  paraspec_string_free(out);
  paraspec_string_free(err);
  return static_cast<int>(status);
}
