/*
 * Copyright 2026 The Entrobound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libentrobound.
 *
 * Every fallible call returns an eb_status; on failure a message is
 * available from eb_last_error() (per thread, valid until the next call).
 * Strings returned through char** are owned by the caller and released with
 * eb_string_free. Handles are released with their *_free function; passing
 * NULL to a free function is a no-op.
 */

#ifndef ENTROBOUND_ENTROBOUND_H_
#define ENTROBOUND_ENTROBOUND_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EB_API __declspec(dllexport)
#else
#define EB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes of the command-line tool. */
typedef enum eb_status {
  EB_OK = 0,
  EB_ERR_NUMERIC = 1,  /* solver inconsistency or failed verification */
  EB_ERR_INPUT = 2,    /* malformed file, invalid parameter */
  EB_ERR_RESOURCE = 3  /* size guard refused the request */
} eb_status;

typedef struct eb_pair eb_pair; /* basis-change unitary of a measurement pair */
typedef struct eb_hull eb_hull; /* positive convex hull (tangent form) */

EB_API const char* eb_version(void);
EB_API const char* eb_last_error(void);
EB_API void eb_string_free(char* s);

/* ---- measurement pairs ---------------------------------------------- */

EB_API eb_status eb_pair_load(const char* path, eb_pair** out);
EB_API eb_status eb_pair_parse(const char* json, eb_pair** out);
/* re, im: row-major dim*dim arrays. */
EB_API eb_status eb_pair_from_matrix(int dim, const double* re, const double* im,
                                     eb_pair** out);
EB_API eb_status eb_pair_hadamard(eb_pair** out);
EB_API eb_status eb_pair_identity(int dim, eb_pair** out);
EB_API eb_status eb_pair_random(int dim, uint64_t seed, eb_pair** out);
EB_API eb_status eb_pair_tensor(const eb_pair* a, const eb_pair* b, eb_pair** out);
EB_API int eb_pair_dim(const eb_pair* pair);
EB_API eb_status eb_pair_to_json(const eb_pair* pair, char** out);
EB_API void eb_pair_free(eb_pair* pair);

/* ---- run configuration ---------------------------------------------- */

typedef struct eb_config {
  const char* command;           /* recorded in reports */
  const char* const* inputs;     /* input file names, recorded in reports */
  int n_inputs;
  double lambda;                 /* default 1 */
  double mu;                     /* default 1 */
  int n_max_exponent;            /* N = 2 .. 2^K, default 10 */
  int restarts;                  /* default 32 */
  uint64_t seed;                 /* default 0 */
  int seed_set;                  /* nonzero when the caller chose the seed */
  double tol;                    /* <= 0 selects the per-command default */
  int nats;                      /* report in nats instead of bits */
  int trials;                    /* <= 0 selects the per-suite default */
  double p;                      /* multiplicativity exponents, default 1, inf */
  double q;
  int samples;                   /* region / Renyi sample count */
  int sweep_ratios;              /* hull sweep size, default 64 */
  double N;                      /* Renyi check, default 4 */
  int dimension_cap;             /* default 36 */
} eb_config;

EB_API void eb_config_init(eb_config* cfg);

/* ---- bounds ----------------------------------------------------------- */

/* Full report JSON (tool version, resolved config, bound result). */
EB_API eb_status eb_bound(const eb_pair* pair, const eb_config* cfg, char** report);

EB_API eb_status eb_mu_bound(const eb_pair* pair, double lambda, double mu,
                             double* out_bits);
EB_API eb_status eb_omega(const eb_pair* pair, double lambda, double mu, double N,
                          uint64_t seed, int restarts, double* out_value);

/*
 * Verification suites: "additivity", "multiplicativity", "hull",
 * "three-pauli", "renyi". Pairs are optional; without them the suite draws
 * seeded random qubit pairs. *all_pass is set when the call succeeds.
 */
EB_API eb_status eb_verify(const char* suite, const eb_pair* const* pairs,
                           int n_pairs, const eb_config* cfg, char** report,
                           int* all_pass);

/* ---- regions ---------------------------------------------------------- */

/* CSV "hx,hy" rows: 2d basis states followed by cfg->samples random states. */
EB_API eb_status eb_region_samples_csv(const eb_pair* pair, const eb_config* cfg,
                                       char** csv);
EB_API eb_status eb_region_hull(const eb_pair* pair, const eb_config* cfg,
                                eb_hull** out);
/* Reads either a hull JSON or a unitary JSON (whose hull is computed). */
EB_API eb_status eb_hull_load(const char* path, const eb_config* cfg, eb_hull** out);
EB_API eb_status eb_hull_parse(const char* json, eb_hull** out);
EB_API eb_status eb_hull_minkowski(const eb_hull* a, const eb_hull* b, eb_hull** out);
EB_API eb_status eb_hull_to_json(const eb_hull* hull, const eb_config* cfg,
                                 char** out);
EB_API size_t eb_hull_tangent_count(const eb_hull* hull);
EB_API void eb_hull_free(eb_hull* hull);

#ifdef __cplusplus
}
#endif

#endif /* ENTROBOUND_ENTROBOUND_H_ */
