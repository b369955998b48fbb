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

/* C interface to the paraspec library. All handles are opaque; every
 * function returns a paraspec_status and writes results through out
 * parameters. Strings returned by the library are owned by the caller and
 * must be released with paraspec_string_free. */
#ifndef PARASPEC_PARASPEC_H
#define PARASPEC_PARASPEC_H

#include <stddef.h>

#if defined(PARASPEC_BUILDING_LIBRARY)
#define PARASPEC_API __attribute__((visibility("default")))
#else
#define PARASPEC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit codes for the command-line tool. */
typedef enum paraspec_status {
  PARASPEC_OK = 0,
  PARASPEC_INTERNAL = 1,
  PARASPEC_SCHEMA = 2,
  PARASPEC_NONCONVERGENCE = 3,
  PARASPEC_PRECONDITION = 4
} paraspec_status;

typedef enum paraspec_bundle { PARASPEC_BUNDLE_E = 0, PARASPEC_BUNDLE_END = 1 } paraspec_bundle;

typedef struct paraspec_data paraspec_data;

PARASPEC_API const char* paraspec_version(void);
PARASPEC_API const char* paraspec_status_name(paraspec_status status);

/* Message of the last failure on the calling thread, or "" if none. */
PARASPEC_API const char* paraspec_last_error(void);

PARASPEC_API void paraspec_string_free(char* text);

/* Parses one datum (JSON object). */
PARASPEC_API paraspec_status paraspec_data_parse(const char* json, paraspec_data** out);
PARASPEC_API void paraspec_data_free(paraspec_data* data);

PARASPEC_API paraspec_status paraspec_data_num_punctures(const paraspec_data* data, size_t* out);

/* Parabolic degree as a canonical "p/q" string. */
PARASPEC_API paraspec_status paraspec_parabolic_degree(const paraspec_data* data, char** out);

PARASPEC_API paraspec_status paraspec_moduli_dimension(const paraspec_data* data, long long* out);

/* Exact eta invariant at one puncture as "p/q". */
PARASPEC_API paraspec_status paraspec_eta_closed(const paraspec_data* data, size_t puncture,
                                                 paraspec_bundle bundle, char** out);

/* Hurwitz zeta at real s != 1 and rational beta in (0,1] given as "p/q". */
PARASPEC_API paraspec_status paraspec_hurwitz_zeta(double s, const char* beta, double tol,
                                                   double* out);

/* Vertical heat trace summed over all punctures. */
PARASPEC_API paraspec_status paraspec_heat_trace(const paraspec_data* data, paraspec_bundle bundle,
                                                 double t, double* out);

/* Model log-determinant for one progression with nonzero offset "p/q". */
PARASPEC_API paraspec_status paraspec_log_det_model(const char* offset, long long multiplicity,
                                                    double* out);

/* Runs a full report. options_json holds {"command": ..., "format": ...,
 * ...}. On success *out receives the rendered report; on failure *err
 * receives a message. Either pointer may be left NULL by the library. */
PARASPEC_API paraspec_status paraspec_run(const char* document, const char* options_json,
                                          char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* PARASPEC_PARASPEC_H */
