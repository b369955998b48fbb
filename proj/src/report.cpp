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

#include "paraspec/report.hpp"

#include "paraspec/chern.hpp"
#include "paraspec/errors.hpp"
#include "paraspec/eta.hpp"
#include "paraspec/heat.hpp"
#include "paraspec/specfun.hpp"
#include "paraspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

namespace paraspec {

double round15(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", x);
  return std::strtod(buffer, nullptr);
}

namespace {

PrecisionPolicy policy_for(const RunConfig& config) {
  PrecisionPolicy policy;
  if (config.tol) policy.target_abs_tol = *config.tol;
  return policy;
}

Json progressions_json(const SpectrumFamily& spec) {
  Json out = Json::array();
  for (const auto& p : spec.progressions())
    out.push_back({{"offset", to_string(p.offset)}, {"multiplicity", p.multiplicity}});
  return out;
}

Json components_json(const GradedClass& cls) {
  Json out;
  for (int degree = 0; degree <= cls.truncation_degree(); degree += 2)
    out[std::to_string(degree)] = cls.degree_part(degree).render();
  return out;
}

Json validate_report(const ParabolicData& data) {
  const ValidationReport report = validate(data);
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"code", v.code}, {"detail", v.detail}});
  Json out;
  out["admissible"] = report.admissible();
  out["violations"] = std::move(violations);
  out["warnings"] = report.warnings;
  out["euler_characteristic"] = euler_characteristic(data.surface);
  out["parabolic_degree"] = to_string(parabolic_degree(data));
  out["parabolic_slope"] = to_string(parabolic_slope(data));
  out["pardeg_zero"] = report.pardeg_zero;
  Json flags = Json::array();
  for (const auto& flag : data.flags) flags.push_back(to_string(flag_correction_dimension(flag, data.rank)));
  out["flag_dimensions"] = std::move(flags);
  out["formulas"] = {
      {"euler_characteristic", "2 - 2g - n"},
      {"parabolic_degree", "deg + sum_i sum_j a_j(p_i) k_j(p_i)"},
      {"parabolic_slope", "pardeg / rank"},
      {"flag_dimensions", "(k^2 - sum_j k_j^2) / 2"},
  };
  return out;
}

Json spectrum_report(const ParabolicData& data, const RunConfig& config) {
  const FredholmReport fredholm = fredholm_classify(data, config.bundle);
  Json punctures = Json::array();
  std::vector<SpectrumFamily> parts;
  for (std::size_t i = 0; i < data.flags.size(); ++i) {
    parts.push_back(vertical_spectrum(data.flags[i], config.bundle));
    punctures.push_back({{"progressions", progressions_json(parts.back())},
                         {"kernel_rank", vertical_kernel_rank(parts.back())}});
  }
  Json eigenvalues = Json::array();
  for (const auto& e : eigenvalues_in_window(merge_spectra(parts), config.window))
    eigenvalues.push_back({{"position", to_string(e.position)},
                           {"eigenvalue", round15(e.value)},
                           {"multiplicity", e.multiplicity}});
  Json out;
  out["bundle"] = bundle_name(config.bundle);
  out["window"] = round15(config.window);
  out["fredholm"] = {{"fredholm", fredholm.fredholm},
                     {"discrete_spectrum", fredholm.discrete_spectrum},
                     {"horizontal_invertible", fredholm.horizontal_invertible},
                     {"vertical_kernel_rank_per_puncture", fredholm.vertical_kernel_rank_per_puncture},
                     {"reasons", fredholm.reasons}};
  out["horizontal_spectrum"] = to_string(horizontal_spectrum_datum());
  out["band_edge_convention"] = "unscaled; multiply by 2*pi to compare with eigenvalues";
  out["punctures"] = std::move(punctures);
  out["eigenvalues"] = std::move(eigenvalues);
  out["formulas"] = {
      {"eigenvalues", "2*pi*(offset + m), m in Z"},
      {"progressions_E", "(a_j, k_j) per weight level"},
      {"progressions_End", "(a_j - a_l, k_j k_l) per ordered pair"},
  };
  return out;
}

Json eta_report(const ParabolicData& data, const RunConfig& config) {
  const PrecisionPolicy policy = policy_for(config);
  bool agree = true;
  Rational total_e = 0, total_end = 0;
  Json punctures = Json::array();
  for (std::size_t i = 0; i < data.flags.size(); ++i) {
    Json entry;
    for (Bundle bundle : {Bundle::E, Bundle::End}) {
      const EtaResult closed = bundle == Bundle::E ? eta_E(data, i) : eta_End(data, i);
      const EtaResult zeta = eta_at_puncture(data, i, bundle, EtaMethod::Zeta, policy);
      const EtaResult heat = eta_at_puncture(data, i, bundle, EtaMethod::Heat, policy);
      agree = agree && std::abs(closed.value - zeta.value) < kEtaZetaAgreement &&
              std::abs(closed.value - heat.value) < kEtaHeatAgreement;
      (bundle == Bundle::E ? total_e : total_end) += *closed.exact;
      entry[std::string("eta_") + bundle_name(bundle)] = {
          {"closed", to_string(*closed.exact)},
          {"zeta", round15(zeta.value)},
          {"heat", round15(heat.value)}};
    }
    punctures.push_back(std::move(entry));
  }
  Json out;
  out["eta_E"] = to_string(total_e);
  out["eta_End"] = to_string(total_end);
  out["methods_agree"] = agree;
  out["agreement_thresholds"] = {{"zeta", kEtaZetaAgreement}, {"heat", kEtaHeatAgreement}};
  out["punctures"] = std::move(punctures);
  out["formulas"] = {
      {"eta_E", "sum_{a_j > 0} k_j (1 - 2 a_j)"},
      {"eta_End", "sum_{j != l} k_j k_l sign(a_j - a_l)(1 - 2|a_j - a_l|)"},
      {"zeta", "k (zeta_H(0,|d|) - zeta_H(0,1-|d|)) sign(d), Euler-Maclaurin continuation"},
      {"heat", "pi^{-1/2} int_0^inf t^{-1/2} Tr(D exp(-t D^2)) dt"},
  };
  return out;
}

Json index_report(const ParabolicData& data, const RunConfig& config) {
  const int d = config.degree_cap;
  const InteriorTerm interior = interior_term(data, config.bundle);
  GradedClass cls(d), eta_form(d), horizontal(d);
  bool assembly_agrees = false;
  if (config.bundle == Bundle::E) {
    cls = index_class_E(data, d);
    eta_form = eta_form_E(data, d);
    horizontal = horizontal_eta_form(data, Bundle::E, d);
    assembly_agrees = cls == interior.as_class(d) - eta_form - horizontal;
  } else {
    cls = index_class_End(data, d, true);
    eta_form = eta_form_End(data, d);
    horizontal = horizontal_eta_form(data, Bundle::End, d);
    assembly_agrees = index_class_End(data, d) == interior.as_class(d) - eta_form - horizontal;
  }
  Json out;
  out["bundle"] = bundle_name(config.bundle);
  out["degree_cap"] = d;
  out["numerical_index"] = to_string(numerical_index(cls));
  out["interior_degree0"] = to_string(interior.numeric_degree0);
  out["index_class"] = cls.render();
  out["components"] = components_json(cls);
  out["eta_form"] = eta_form.render();
  out["horizontal_eta_form"] = horizontal.render();
  out["assembly_agrees"] = assembly_agrees;
  if (config.bundle == Bundle::E) {
    out["formulas"] = {
        {"index_class", "Int_E - sum_i sum_j (1/2 - a_j) Ch(E_ij) + sum_{a_1(p_i)=0} Ch(E_i1)"},
        {"interior_degree0", "k (2 - 2g - n) / 2"},
        {"eta_form", "sum_i sum_{a_j > 0} (1/2 - a_j) Ch(E_ij)"},
        {"horizontal_eta_form", "-(1/2) sum_{a_1(p_i)=0} Ch(E_i1)"},
    };
  } else {
    out["formulas"] = {
        {"index_class",
         "Int_End - sum_i sum_{j!=l} mu_jl Ch(E_ij) Ch(E_il*) + (1/2) sum_i sum_l Ch(E_il) Ch(E_il*) - dT"},
        {"mu_jl", "sign(a_j - a_l)(1/2 - |a_j - a_l|)"},
        {"interior_degree0", "k^2 (2 - 2g - n) / 2"},
        {"eta_form", "sum_i sum_{j!=l} sign(a_j - a_l)(1 - 2|a_j - a_l|)/2 Ch(E_ij) Ch(E_il*)"},
        {"horizontal_eta_form", "-(1/2) sum_i sum_j Ch(E_ij) Ch(E_ij*)"},
    };
  }
  return out;
}

Json dimension_report(const ParabolicData& data) {
  const long long dimension = moduli_dimension(data);
  Rational oracle = Rational(Integer(data.rank) * data.rank * (data.surface.genus - 1) + 1);
  Json flags = Json::array();
  for (const auto& flag : data.flags) {
    const Rational correction = flag_correction_dimension(flag, data.rank);
    oracle += correction;
    flags.push_back(to_string(correction));
  }
  Json out;
  out["dimension"] = dimension;
  out["index_End"] = to_string(numerical_index(index_class_End(data, 0)));
  out["flag_dimensions"] = std::move(flags);
  out["flag_count_dimension"] = to_string(oracle);
  out["agrees"] = oracle == Rational(dimension);
  out["formulas"] = {
      {"dimension", "1 - index(End)"},
      {"flag_count_dimension", "k^2 (g - 1) + 1 + sum_i (k^2 - sum_j k_j^2) / 2"},
  };
  return out;
}

Json curvature_report(const ParabolicData& data, const RunConfig& config) {
  const int d = std::max(2, config.degree_cap);
  const GradedClass curvature = quillen_curvature(data, config.bundle, d);
  const GradedClass index_two_form =
      (config.bundle == Bundle::E ? index_class_E(data, d) : index_class_End(data, d))
          .degree_part(2);
  Json out;
  out["bundle"] = bundle_name(config.bundle);
  out["curvature"] = curvature.render();
  out["boundary_two_form"] = curvature.boundary_part().render();
  out["matches_index_two_form"] = curvature == index_two_form;
  out["formulas"] = config.bundle == Bundle::E
                        ? Json{{"curvature", "Int_E[2] - sum_i sum_j (1/2 - a_j) c1(E_ij)"}}
                        : Json{{"curvature",
                                "Int_End[2] - sum_i sum_{j!=l} sign(a_j - a_l)(1 - 2|a_j - a_l|) k_l c1(E_ij)"}};
  return out;
}

// Small-time samples used for the asymptotic fit. Exponential corrections
// exp(-1/4t) stay below 1e-8 here.
constexpr double kFitCutoff = 1.0 / 80.0;

Json heat_report(const ParabolicData& data, const RunConfig& config) {
  std::vector<SpectrumFamily> parts;
  for (const auto& flag : data.flags) parts.push_back(vertical_spectrum(flag, config.bundle));
  const SpectrumFamily spec = merge_spectra(parts);

  Json samples = Json::array();
  std::vector<Sample> small_time;
  for (double t : config.t_grid.values()) {
    const double trace = heat_trace_vertical(spec, t);
    samples.push_back({{"t", round15(t)}, {"trace", round15(trace)}});
    if (t <= kFitCutoff) small_time.push_back({t, trace});
  }

  Json fit;
  const std::vector<std::pair<int, int>> exponents = {{-1, 0}, {0, 0}, {-1, 1}, {0, 1}};
  if (small_time.size() >= 2 * exponents.size() &&
      small_time.back().t / small_time.front().t >= 100.0) {
    try {
      const FitResult result = fit_small_time_expansion(small_time, exponents);
      Json terms = Json::array();
      for (const auto& term : result.expansion.terms())
        terms.push_back({{"half_power", term.half_power},
                         {"log_power", term.log_power},
                         {"coefficient", round15(term.coefficient)}});
      fit = {{"terms", std::move(terms)},
             {"residual_rms", round15(result.residual_rms)},
             {"max_log_coefficient", round15(result.expansion.max_log_coefficient())},
             {"log_free", result.expansion.max_log_coefficient() < 1e-8}};
    } catch (const Error& e) {
      fit = {{"error", error_kind_name(e.kind())}, {"message", e.what()}};
    }
  } else {
    fit = {{"skipped", "needs 8 samples with t <= 1/80 spanning two decades"}};
  }

  Json out;
  out["bundle"] = bundle_name(config.bundle);
  out["t_grid"] = {{"start", round15(config.t_grid.start)},
                   {"stop", round15(config.t_grid.stop)},
                   {"points", config.t_grid.points}};
  out["leading_coefficient_expected"] =
      round15(static_cast<double>(spec.total_multiplicity()) / (2.0 * std::sqrt(std::numbers::pi)));
  out["samples"] = std::move(samples);
  out["fit"] = std::move(fit);
  out["formulas"] = {
      {"trace", "sum mult sum_m exp(-4 pi^2 t (m + offset)^2)"},
      {"dual", "(4 pi t)^{-1/2} sum_n exp(-n^2/4t) cos(2 pi n offset), t < 1/(4 pi)"},
      {"fit_template", "t^{-1/2}, 1, t^{-1/2} log t, log t"},
  };
  return out;
}

Json detmodel_report(const ParabolicData& data, const RunConfig& config) {
  const PrecisionPolicy policy = policy_for(config);
  Json families = Json::array();
  long long zero_modes = 0;
  double total = 0.0;
  for (std::size_t i = 0; i < data.flags.size(); ++i) {
    const SpectrumFamily spec = vertical_spectrum(data.flags[i], config.bundle);
    for (const auto& p : spec.progressions()) {
      if (p.offset == 0) {
        zero_modes += p.multiplicity;
        continue;
      }
      const double log_det = log_det_model_vertical(p.offset, p.multiplicity, policy);
      total += log_det;
      families.push_back({{"puncture", i},
                          {"offset", to_string(p.offset)},
                          {"multiplicity", p.multiplicity},
                          {"log_det", round15(log_det)}});
    }
  }
  Json out;
  out["bundle"] = bundle_name(config.bundle);
  out["families"] = std::move(families);
  out["zero_mode_multiplicity"] = zero_modes;
  out["log_det_total"] = round15(total);
  out["formulas"] = {
      {"log_det", "-zeta'(0) of 4 pi^2 (m + offset)^2 = mult log(4 sin^2(pi offset))"},
  };
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

void flatten(const Json& node, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array()) {
    if (node.empty()) out.emplace_back(path, "[]");
    for (std::size_t i = 0; i < node.size(); ++i)
      flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else if (node.is_string()) {
    out.emplace_back(path, node.get<std::string>());
  } else {
    out.emplace_back(path, node.dump());
  }
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ",";
    row += csv_field(fields[i]);
  }
  return row + "\n";
}

std::string leaf(const Json& node) {
  return node.is_string() ? node.get<std::string>() : node.dump();
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table table_for(const Json& report, Command command) {
  Table table;
  if (report.contains("error")) {
    table.header = {"key", "value"};
    std::vector<std::pair<std::string, std::string>> pairs;
    flatten(report["error"], "error", pairs);
    for (auto& [k, v] : pairs) table.rows.push_back({k, v});
    return table;
  }
  switch (command) {
    case Command::Spectrum:
      table.header = {"eigenvalue", "multiplicity"};
      for (const auto& e : report["eigenvalues"])
        table.rows.push_back({leaf(e["eigenvalue"]), leaf(e["multiplicity"])});
      return table;
    case Command::Heat:
      table.header = {"t", "trace"};
      for (const auto& s : report["samples"]) table.rows.push_back({leaf(s["t"]), leaf(s["trace"])});
      return table;
    case Command::DetModel:
      table.header = {"puncture", "offset", "multiplicity", "log_det"};
      for (const auto& f : report["families"])
        table.rows.push_back({leaf(f["puncture"]), leaf(f["offset"]), leaf(f["multiplicity"]),
                              leaf(f["log_det"])});
      return table;
    default: {
      table.header = {"key", "value"};
      std::vector<std::pair<std::string, std::string>> pairs;
      flatten(report, "", pairs);
      for (auto& [k, v] : pairs)
        if (k != "input" && k.rfind("input.", 0) != 0) table.rows.push_back({k, v});
      return table;
    }
  }
}

std::string render(const std::vector<Json>& reports, bool batch, const RunConfig& config) {
  switch (config.format) {
    case OutputFormat::Json: {
      if (!batch) return reports.front().dump(2) + "\n";
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(r);
      return all.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        Table table = table_for(reports[i], config.command);
        if (batch) {
          table.header.insert(table.header.begin(), "entry");
          for (auto& row : table.rows) row.insert(row.begin(), std::to_string(i));
        }
        if (i == 0 || !batch) out += csv_row(table.header);
        for (const auto& row : table.rows) out += csv_row(row);
      }
      return out;
    }
    case OutputFormat::Text: {
      std::string out;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (batch) out += "[entry " + std::to_string(i) + "]\n";
        std::vector<std::pair<std::string, std::string>> pairs;
        flatten(reports[i], "", pairs);
        for (const auto& [k, v] : pairs) out += k + ": " + v + "\n";
      }
      return out;
    }
  }
  return {};
}

}  // namespace

Json run_report(const ParabolicData& data, const RunConfig& config) {
  Json report;
  report["command"] = command_name(config.command);
  report["input"] = serialize(data);
  Json body;
  switch (config.command) {
    case Command::Validate: body = validate_report(data); break;
    case Command::Spectrum: body = spectrum_report(data, config); break;
    case Command::Eta: body = eta_report(data, config); break;
    case Command::Index: body = index_report(data, config); break;
    case Command::Dimension: body = dimension_report(data); break;
    case Command::Curvature: body = curvature_report(data, config); break;
    case Command::Heat: body = heat_report(data, config); break;
    case Command::DetModel: body = detmodel_report(data, config); break;
  }
  for (auto& [key, value] : body.items()) report[key] = value;
  return report;
}

RunOutcome run_document(std::string_view document, const RunConfig& config) {
  RunOutcome outcome;
  ParsedDocument parsed;
  try {
    parsed = parse_document(document);
  } catch (const Error& e) {
    outcome.exit_code = exit_code(e.kind());
    const std::string what = e.what();
    outcome.error = std::string(error_kind_name(e.kind())) + " at " +
                    (what.rfind(':', 0) == 0 ? "(root)" + what : what);
    return outcome;
  }

  std::vector<Json> reports;
  for (std::size_t i = 0; i < parsed.entries.size(); ++i) {
    try {
      Json report = run_report(parsed.entries[i], config);
      if (!parsed.labels[i].empty()) report["label"] = parsed.labels[i];
      reports.push_back(std::move(report));
    } catch (const Error& e) {
      const int code = exit_code(e.kind());
      outcome.exit_code = std::max(outcome.exit_code, code);
      if (!parsed.batch) {
        outcome.error = std::string(error_kind_name(e.kind())) + ": " + e.what();
        return outcome;
      }
      Json failed;
      failed["command"] = command_name(config.command);
      failed["input"] = serialize(parsed.entries[i]);
      failed["error"] = {{"kind", error_kind_name(e.kind())},
                         {"message", e.what()},
                         {"exit_code", code}};
      reports.push_back(std::move(failed));
    }
  }
  outcome.output = render(reports, parsed.batch, config);
  return outcome;
}

}  // namespace paraspec
