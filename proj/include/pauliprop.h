// Copyright 2026 The pauliprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to libpauliprop. All objects are opaque handles released with
 * the matching *_free function. Every call returns a pp_status; on failure
 * pp_last_error() describes the problem for the calling thread. Strings
 * returned through char ** outputs are released with pp_string_free. */

#ifndef PAULIPROP_H
#define PAULIPROP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PP_API __declspec(dllexport)
#else
#define PP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
    PP_OK = 0,
    PP_ERR_INVALID_ARGUMENT = 1,
    PP_ERR_PARSE = 2,
    PP_ERR_VALIDATION = 3,
    PP_ERR_BOUND_OVERFLOW = 4,
    PP_ERR_ORACLE_TOO_LARGE = 5,
    PP_ERR_ZERO_OPERATOR = 6,
    PP_ERR_NOT_COMPLETELY_POSITIVE = 7,
    PP_ERR_SOLVER = 8,
    PP_ERR_UNSUPPORTED = 9,
    PP_ERR_INTERNAL = 10
} pp_status;

typedef enum pp_direction { PP_SCHRODINGER = 0, PP_HEISENBERG = 1 } pp_direction;

typedef enum pp_projection {
    PP_PROJECT_GENERAL = 0,
    PP_PROJECT_UNITAL = 1,
    PP_PROJECT_TRACE_PRESERVING = 2,
    PP_PROJECT_BOTH = 3
} pp_projection;

typedef struct pp_circuit pp_circuit;
typedef struct pp_channel pp_channel;
typedef struct pp_instance pp_instance;

typedef struct pp_estimate {
    double mean;
    double stddev;
    double min;
    double max;
    uint64_t n_samples;
    double epsilon;
    double delta;
    double total_bound;
    uint64_t seed;
    size_t workers;
    double wall_time;
} pp_estimate;

typedef struct pp_qaoa_record {
    double gamma;
    double beta;
    size_t num_qubits;
    size_t m;
    size_t max_degree;
    uint64_t n_samples;
    double c_heis;
    double c_vdn;
    double eps_heis;
    double eps_nest;
    double abs_err;
    double seconds;
} pp_qaoa_record;

PP_API const char *pp_version(void);
PP_API const char *pp_last_error(void);
PP_API const char *pp_status_name(pp_status status);
PP_API void pp_string_free(char *s);
/* PAULIPROP_WORKERS if set, else the hardware concurrency. */
PP_API size_t pp_default_workers(void);
PP_API pp_status pp_parse_direction(const char *name, pp_direction *out);
PP_API pp_status pp_parse_projection(const char *name, pp_projection *out);

/* Circuits (JSON documents, see README). */
PP_API pp_status pp_circuit_parse(const char *json, pp_circuit **out);
PP_API pp_status pp_circuit_load(const char *path, pp_circuit **out);
PP_API void pp_circuit_free(pp_circuit *circuit);
PP_API pp_status pp_circuit_num_qubits(const pp_circuit *circuit, size_t *out);
PP_API pp_status pp_cost_json(const pp_circuit *circuit, pp_direction direction, char **json);
PP_API pp_status pp_plan_samples(const pp_circuit *circuit, pp_direction direction, double epsilon, double delta,
                                 uint64_t *n_samples);
/* workers = 0 selects pp_default_workers(). */
PP_API pp_status pp_estimate_run(const pp_circuit *circuit, pp_direction direction, uint64_t n_samples,
                                 double delta, uint64_t seed, size_t workers, pp_estimate *out);
PP_API pp_status pp_estimate_json(const pp_circuit *circuit, pp_direction direction, uint64_t n_samples,
                                  double delta, uint64_t seed, size_t workers, char **json);
/* Dense density-matrix value of Tr(E rho), n <= 8. */
PP_API pp_status pp_run_exact(const pp_circuit *circuit, double *value);

/* Channels (a single channel spec without "qubits"). */
PP_API pp_status pp_channel_parse(const char *json, pp_channel **out);
PP_API void pp_channel_free(pp_channel *channel);
PP_API pp_status pp_channel_qubits(const pp_channel *channel, size_t *k_in, size_t *k_out);
PP_API pp_status pp_channel_norms(const pp_channel *channel, double *d_forward, double *d_adjoint);
/* Venn classification of a single-qubit channel as a JSON object with
 * valid, d_forward, d_adjoint, robustness and category. */
PP_API pp_status pp_channel_classify(const pp_channel *channel, char **json);
/* Classification of the channel whose normalized Choi state is the 4x4
 * matrix re + i im (row-major) after the given projection. */
PP_API pp_status pp_choi_classify(const double *re, const double *im, pp_projection mode, char **json);

/* Censuses. counts receives stabilizer mixture, hyper-octahedral, magic. */
PP_API pp_status pp_state_census(size_t num_qubits, uint64_t samples, uint64_t seed, size_t workers,
                                 uint64_t counts[3]);
/* Histogram CSV; when records is nonzero the per-sample CSV follows after a
 * blank line. with_adjoints fills the adjoint_count column. */
PP_API pp_status pp_channel_census_csv(uint64_t samples, pp_projection mode, uint64_t seed, size_t workers,
                                       int records, int with_adjoints, char **csv);

/* QAOA on random E3LIN2 instances. max_degree = 0 selects floor(m/10). */
PP_API pp_status pp_instance_generate(size_t num_qubits, size_t m, size_t max_degree, uint64_t seed,
                                      pp_instance **out);
PP_API pp_status pp_instance_load(const char *path, pp_instance **out);
PP_API void pp_instance_free(pp_instance *instance);
PP_API pp_status pp_instance_json(const pp_instance *instance, char **json);
PP_API pp_status pp_qaoa_run(const pp_instance *instance, double gamma, double beta, uint64_t n_samples,
                             double delta, uint64_t seed, size_t workers, pp_qaoa_record *out);
PP_API pp_status pp_qaoa_exact(const pp_instance *instance, double gamma, double beta, double *value);
PP_API const char *pp_qaoa_csv_header(void);
PP_API pp_status pp_qaoa_csv_row(const pp_qaoa_record *record, int timing, char **csv);

/* Figure datasets as CSV. which is fig1, fig2, fig3, fig5 or fig6; params
 * is a JSON object (may be NULL) overriding the defaults listed in the
 * README. */
PP_API pp_status pp_figure_csv(const char *which, const char *params, char **csv);

#ifdef __cplusplus
}
#endif

#endif
