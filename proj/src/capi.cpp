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

#include "paraspec/paraspec.h"

#include "paraspec/chern.hpp"
#include "paraspec/config.hpp"
#include "paraspec/errors.hpp"
#include "paraspec/eta.hpp"
#include "paraspec/heat.hpp"
#include "paraspec/report.hpp"
#include "paraspec/specfun.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct paraspec_data {
  paraspec::ParabolicData datum;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& text) {
  char* copy = static_cast<char*>(std::malloc(text.size() + 1));
  if (copy) std::memcpy(copy, text.c_str(), text.size() + 1);
  return copy;
}

paraspec_status to_status(int code) {
  switch (code) {
    case 0: return PARASPEC_OK;
    case 2: return PARASPEC_SCHEMA;
    case 3: return PARASPEC_NONCONVERGENCE;
    case 4: return PARASPEC_PRECONDITION;
    default: return PARASPEC_INTERNAL;
  }
}

paraspec::Bundle to_bundle(paraspec_bundle bundle) {
  return bundle == PARASPEC_BUNDLE_END ? paraspec::Bundle::End : paraspec::Bundle::E;
}

// Runs body, translating exceptions into status codes.
template <class Body>
paraspec_status guarded(Body&& body) {
  last_error.clear();
  try {
    body();
    return PARASPEC_OK;
  } catch (const paraspec::Error& e) {
    last_error = std::string(paraspec::error_kind_name(e.kind())) + ": " + e.what();
    return to_status(paraspec::exit_code(e.kind()));
  } catch (const std::exception& e) {
    last_error = e.what();
    return PARASPEC_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return PARASPEC_INTERNAL;
  }
}

paraspec_status null_argument() {
  last_error = "null argument";
  return PARASPEC_SCHEMA;
}

}  // namespace

extern "C" {

const char* paraspec_version(void) { return "1.0.0"; }

const char* paraspec_status_name(paraspec_status status) {
  switch (status) {
    case PARASPEC_OK: return "ok";
    case PARASPEC_INTERNAL: return "internal";
    case PARASPEC_SCHEMA: return "schema";
    case PARASPEC_NONCONVERGENCE: return "nonconvergence";
    case PARASPEC_PRECONDITION: return "precondition";
  }
  return "unknown";
}

const char* paraspec_last_error(void) { return last_error.c_str(); }

void paraspec_string_free(char* text) { std::free(text); }

paraspec_status paraspec_data_parse(const char* json, paraspec_data** out) {
  if (!json || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    paraspec::ParsedDocument parsed = paraspec::parse_document(json);
    if (parsed.batch) throw paraspec::SchemaError("", "expected a single datum, got an array");
    *out = new paraspec_data{std::move(parsed.entries.front())};
  });
}

void paraspec_data_free(paraspec_data* data) { delete data; }

paraspec_status paraspec_data_num_punctures(const paraspec_data* data, size_t* out) {
  if (!data || !out) return null_argument();
  *out = data->datum.flags.size();
  return PARASPEC_OK;
}

paraspec_status paraspec_parabolic_degree(const paraspec_data* data, char** out) {
  if (!data || !out) return null_argument();
  return guarded([&] { *out = duplicate(paraspec::to_string(paraspec::parabolic_degree(data->datum))); });
}

paraspec_status paraspec_moduli_dimension(const paraspec_data* data, long long* out) {
  if (!data || !out) return null_argument();
  return guarded([&] { *out = paraspec::moduli_dimension(data->datum); });
}

paraspec_status paraspec_eta_closed(const paraspec_data* data, size_t puncture,
                                    paraspec_bundle bundle, char** out) {
  if (!data || !out) return null_argument();
  return guarded([&] {
    if (puncture >= data->datum.flags.size())
      throw paraspec::Error(paraspec::ErrorKind::Domain, "puncture index out of range");
    const paraspec::EtaResult result = bundle == PARASPEC_BUNDLE_END
                                           ? paraspec::eta_End(data->datum, puncture)
                                           : paraspec::eta_E(data->datum, puncture);
    *out = duplicate(paraspec::to_string(*result.exact));
  });
}

paraspec_status paraspec_hurwitz_zeta(double s, const char* beta, double tol, double* out) {
  if (!beta || !out) return null_argument();
  return guarded([&] {
    paraspec::PrecisionPolicy policy;
    if (tol > 0) policy.target_abs_tol = tol;
    *out = paraspec::hurwitz_zeta(s, paraspec::parse_rational(beta), policy);
  });
}

paraspec_status paraspec_heat_trace(const paraspec_data* data, paraspec_bundle bundle, double t,
                                    double* out) {
  if (!data || !out) return null_argument();
  return guarded([&] {
    std::vector<paraspec::SpectrumFamily> parts;
    for (const auto& flag : data->datum.flags)
      parts.push_back(paraspec::vertical_spectrum(flag, to_bundle(bundle)));
    *out = paraspec::heat_trace_vertical(paraspec::merge_spectra(parts), t);
  });
}

paraspec_status paraspec_log_det_model(const char* offset, long long multiplicity, double* out) {
  if (!offset || !out) return null_argument();
  return guarded([&] {
    *out = paraspec::log_det_model_vertical(paraspec::parse_rational(offset), multiplicity);
  });
}

paraspec_status paraspec_run(const char* document, const char* options_json, char** out,
                             char** err) {
  if (out) *out = nullptr;
  if (err) *err = nullptr;
  if (!document || !options_json) return null_argument();
  paraspec::RunOutcome outcome;
  const paraspec_status status = guarded([&] {
    outcome = paraspec::run_document(document, paraspec::parse_run_options(options_json));
  });
  if (status != PARASPEC_OK) {
    if (err) *err = duplicate(last_error);
    return status;
  }
  if (out && !outcome.output.empty()) *out = duplicate(outcome.output);
  if (!outcome.error.empty()) {
    last_error = outcome.error;
    if (err) *err = duplicate(outcome.error);
  }
  return to_status(outcome.exit_code);
}

}  // extern "C"
