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

#include "paraspec/config.hpp"

#include "paraspec/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace paraspec {

namespace {

const Json& require(const Json& node, const std::string& key, const std::string& pointer) {
  const auto it = node.find(key);
  if (it == node.end()) throw SchemaError(pointer + "/" + key, "missing required key");
  return *it;
}

long long require_integer(const Json& node, const std::string& pointer, long long min_value) {
  if (!node.is_number_integer()) throw SchemaError(pointer, "expected an integer");
  long long value = 0;
  if (node.is_number_unsigned()) {
    const auto u = node.get<unsigned long long>();
    if (u > static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
      throw SchemaError(pointer, "integer out of range");
    value = static_cast<long long>(u);
  } else {
    value = node.get<long long>();
  }
  if (value < min_value)
    throw SchemaError(pointer, "must be at least " + std::to_string(min_value));
  return value;
}

int require_int(const Json& node, const std::string& pointer, int min_value) {
  const long long value = require_integer(node, pointer, min_value);
  if (value > std::numeric_limits<int>::max()) throw SchemaError(pointer, "integer out of range");
  return static_cast<int>(value);
}

void reject_unknown_keys(const Json& node, std::initializer_list<const char*> allowed,
                         const std::string& pointer) {
  for (const auto& [key, value] : node.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || key == name;
    if (!known) throw SchemaError(pointer + "/" + key, "unknown key");
  }
}

FlagData parse_flag(const Json& node, const std::string& pointer, int rank) {
  if (!node.is_object()) throw SchemaError(pointer, "expected an object");
  reject_unknown_keys(node, {"weights", "mults"}, pointer);
  const Json& weights = require(node, "weights", pointer);
  const Json& mults = require(node, "mults", pointer);
  if (!weights.is_array() || weights.empty())
    throw SchemaError(pointer + "/weights", "expected a non-empty array");
  if (!mults.is_array()) throw SchemaError(pointer + "/mults", "expected an array");
  if (mults.size() != weights.size())
    throw SchemaError(pointer + "/mults", "length differs from weights");

  FlagData flag;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const std::string at = pointer + "/weights/" + std::to_string(j);
    if (!weights[j].is_string()) throw SchemaError(at, "weights must be \"p/q\" strings");
    Rational w;
    try {
      w = parse_rational(weights[j].get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorKind::RationalParse, at + ": " + e.what());
    }
    if (w < 0 || w >= 1) throw SchemaError(at, "weight " + to_string(w) + " not in [0,1)");
    if (j > 0 && !(flag.weights.back() < w))
      throw SchemaError(at, "weights not strictly increasing");
    flag.weights.push_back(w);
  }
  for (std::size_t j = 0; j < mults.size(); ++j)
    flag.mults.push_back(require_int(mults[j], pointer + "/mults/" + std::to_string(j), 1));
  if (flag.total_rank() != rank)
    throw SchemaError(pointer + "/mults", "multiplicities sum to " +
                                              std::to_string(flag.total_rank()) +
                                              ", rank is " + std::to_string(rank));
  return flag;
}

double parse_number(std::string_view text, const std::string& pointer) {
  const std::string s(text);
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(value))
    throw SchemaError(pointer, "not a number: \"" + s + "\"");
  return value;
}

}  // namespace

const char* command_name(Command command) noexcept {
  switch (command) {
    case Command::Validate: return "validate";
    case Command::Spectrum: return "spectrum";
    case Command::Eta: return "eta";
    case Command::Index: return "index";
    case Command::Dimension: return "dimension";
    case Command::Curvature: return "curvature";
    case Command::Heat: return "heat";
    case Command::DetModel: return "detmodel";
  }
  return "validate";
}

const char* format_name(OutputFormat format) noexcept {
  switch (format) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "json";
}

std::vector<double> TGrid::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(points));
  const double lo = std::log(start), hi = std::log(stop);
  for (int i = 0; i < points; ++i) {
    if (i == 0) {
      out.push_back(start);
    } else if (i == points - 1) {
      out.push_back(stop);
    } else {
      out.push_back(std::exp(lo + (hi - lo) * i / (points - 1)));
    }
  }
  return out;
}

ParabolicData parse_datum(const Json& node, const std::string& pointer) {
  if (!node.is_object()) throw SchemaError(pointer, "expected an object");
  reject_unknown_keys(node, {"genus", "rank", "degree", "punctures", "label"}, pointer);
  if (node.contains("label") && !node["label"].is_string())
    throw SchemaError(pointer + "/label", "expected a string");

  ParabolicData data;
  data.surface.genus = require_int(require(node, "genus", pointer), pointer + "/genus", 0);
  data.rank = require_int(require(node, "rank", pointer), pointer + "/rank", 1);
  data.degree = require_integer(require(node, "degree", pointer), pointer + "/degree",
                                std::numeric_limits<long long>::min());
  const Json& punctures = require(node, "punctures", pointer);
  if (!punctures.is_array()) throw SchemaError(pointer + "/punctures", "expected an array");
  for (std::size_t i = 0; i < punctures.size(); ++i)
    data.flags.push_back(
        parse_flag(punctures[i], pointer + "/punctures/" + std::to_string(i), data.rank));
  data.surface.punctures = static_cast<int>(data.flags.size());

  const int chi = euler_characteristic(data.surface);
  if (chi >= 0)
    throw SchemaError(pointer + "/genus", "surface is not hyperbolic: 2 - 2g - n = " +
                                              std::to_string(chi));
  return data;
}

ParsedDocument parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  ParsedDocument doc;
  auto take = [&](const Json& node, const std::string& pointer) {
    doc.entries.push_back(parse_datum(node, pointer));
    doc.labels.push_back(node.value("label", std::string()));
  };
  if (root.is_array()) {
    if (root.empty()) throw SchemaError("", "empty batch");
    doc.batch = true;
    for (std::size_t i = 0; i < root.size(); ++i) take(root[i], "/" + std::to_string(i));
  } else {
    take(root, "");
  }
  return doc;
}

Json serialize(const ParabolicData& data) {
  Json out;
  out["genus"] = data.surface.genus;
  out["rank"] = data.rank;
  out["degree"] = data.degree;
  Json punctures = Json::array();
  for (const auto& flag : data.flags) {
    Json weights = Json::array();
    for (const auto& w : flag.weights) weights.push_back(to_string(w));
    Json entry;
    entry["weights"] = std::move(weights);
    entry["mults"] = flag.mults;
    punctures.push_back(std::move(entry));
  }
  out["punctures"] = std::move(punctures);
  return out;
}

TGrid parse_t_grid(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (;;) {
    const auto colon = text.find(':', begin);
    parts.push_back(text.substr(begin, colon == std::string_view::npos ? colon : colon - begin));
    if (colon == std::string_view::npos) break;
    begin = colon + 1;
  }
  if (parts.size() == 4 && parts[3] == "log") parts.pop_back();
  if (parts.size() != 3) throw SchemaError("/t_grid", "expected START:STOP:POINTS");

  TGrid grid;
  grid.start = parse_number(parts[0], "/t_grid");
  grid.stop = parse_number(parts[1], "/t_grid");
  const double points = parse_number(parts[2], "/t_grid");
  if (points != std::floor(points) || points < 2 || points > 100000)
    throw SchemaError("/t_grid", "POINTS must be an integer >= 2");
  grid.points = static_cast<int>(points);
  if (!(grid.start > 0) || !(grid.stop > grid.start))
    throw SchemaError("/t_grid", "need 0 < START < STOP");
  return grid;
}

RunConfig parse_run_options(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid options JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("", "options must be an object");
  reject_unknown_keys(root, {"command", "format", "bundle", "window", "degree_cap", "tol", "t_grid"},
                      "");

  RunConfig config;
  const Json& command = require(root, "command", "");
  if (!command.is_string()) throw SchemaError("/command", "expected a string");
  bool found = false;
  for (Command c : {Command::Validate, Command::Spectrum, Command::Eta, Command::Index,
                    Command::Dimension, Command::Curvature, Command::Heat, Command::DetModel}) {
    if (command.get<std::string>() == command_name(c)) {
      config.command = c;
      found = true;
    }
  }
  if (!found) throw SchemaError("/command", "unknown command \"" + command.get<std::string>() + "\"");

  if (root.contains("format")) {
    const std::string f = root["format"].is_string() ? root["format"].get<std::string>() : "";
    if (f == "json") config.format = OutputFormat::Json;
    else if (f == "csv") config.format = OutputFormat::Csv;
    else if (f == "text") config.format = OutputFormat::Text;
    else throw SchemaError("/format", "expected json, csv or text");
  }
  if (root.contains("bundle")) {
    const std::string b = root["bundle"].is_string() ? root["bundle"].get<std::string>() : "";
    if (b == "E") config.bundle = Bundle::E;
    else if (b == "End") config.bundle = Bundle::End;
    else throw SchemaError("/bundle", "expected E or End");
  }
  if (root.contains("window")) {
    if (!root["window"].is_number() || !(root["window"].get<double>() > 0))
      throw SchemaError("/window", "expected a positive number");
    config.window = root["window"].get<double>();
  }
  if (root.contains("degree_cap")) {
    config.degree_cap = require_int(root["degree_cap"], "/degree_cap", 0);
    if (config.degree_cap % 2 != 0 || config.degree_cap > 16)
      throw SchemaError("/degree_cap", "expected an even integer between 0 and 16");
  }
  if (root.contains("tol")) {
    if (!root["tol"].is_number() || !(root["tol"].get<double>() > 0))
      throw SchemaError("/tol", "expected a positive number");
    config.tol = root["tol"].get<double>();
  }
  if (root.contains("t_grid")) {
    if (!root["t_grid"].is_string()) throw SchemaError("/t_grid", "expected a string");
    config.t_grid = parse_t_grid(root["t_grid"].get<std::string>());
  }
  return config;
}

}  // namespace paraspec
