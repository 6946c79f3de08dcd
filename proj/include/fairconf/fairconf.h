/* Copyright 2026 The FairConf Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the fairconf scheduling engine.
 *
 * All functions return fc_status; FC_OK is 0. On failure,
 * fc_last_error_message() describes the problem (thread-local). Objects are
 * opaque handles released with their matching _free function; strings
 * returned through char** are heap-allocated and released with
 * fc_string_free().
 */

#ifndef FAIRCONF_FAIRCONF_H_
#define FAIRCONF_FAIRCONF_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_ERR_DIMENSION_MISMATCH,
  FC_ERR_RANGE_VIOLATION,
  FC_ERR_SLOT_OVERLAP,
  FC_ERR_TOO_MANY_TALKS,
  FC_ERR_PARSE,
  FC_ERR_IO,
  FC_ERR_UNKNOWN_TALK_ID,
  FC_ERR_UNKNOWN_SLOT_ID,
  FC_ERR_INVALID_DIMS,
  FC_ERR_DEGENERATE_NORMALIZATION,
  FC_ERR_ALL_ZERO,
  FC_ERR_BUDGET_EXCEEDED,
  FC_ERR_SLOTS_EXHAUSTED,
  FC_ERR_INFEASIBLE,
  FC_ERR_NUMERICAL,
  FC_ERR_INVALID_ARGUMENT,
  FC_ERR_INTERNAL
} fc_status;

typedef struct fc_instance fc_instance;
typedef struct fc_schedule fc_schedule; /* one or more rounds */

const char* fc_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* fc_last_error_message(void);
/* Stable name of a status code, e.g. "RangeViolation". */
const char* fc_status_name(fc_status status);

void fc_string_free(char* text);
void fc_instance_free(fc_instance* instance);
void fc_schedule_free(fc_schedule* schedule);

/* ---- instances ------------------------------------------------------- */

/* format: "json" or "csv-triplet" (path is then the triplet base name). */
fc_status fc_instance_load(const char* path, const char* format, fc_instance** out);
fc_status fc_instance_from_json(const char* text, fc_instance** out);
fc_status fc_instance_to_json(const fc_instance* instance, char** out);
fc_status fc_instance_save(const fc_instance* instance, const char* path,
                           const char* format);
fc_status fc_instance_counts(const fc_instance* instance, int32_t* participants,
                             int32_t* talks, int32_t* slots);

/* ---- generators ------------------------------------------------------ */

fc_status fc_generate_uniform(int32_t m, int32_t n, int32_t l, uint64_t seed,
                              fc_instance** out);
/* name: "fatrec" | "recsys" */
fc_status fc_generate_preset(const char* name, uint64_t seed, fc_instance** out);
fc_status fc_generate_partition(const int64_t* numbers, int32_t count,
                                fc_instance** out);

/* ---- schedules ------------------------------------------------------- */

fc_status fc_schedule_from_json(const fc_instance* instance, const char* text,
                                fc_schedule** out);
fc_status fc_schedule_to_json(const fc_instance* instance, const fc_schedule* schedule,
                              char** out);

/* ---- solving --------------------------------------------------------- */

/* method: "em" | "iam" | "pfair" | "sfair" | "mfairconf" | "exact" | "rrfs".
 * Lambda weights apply to mfairconf/exact/rrfs; pfair and sfair are the
 * fixed parameterizations (0,1,0) and (0,0,1). budget <= 0 means the default
 * enumeration budget. diagnostics_json (optional) receives the method tag,
 * scalarized objective, TEP and solver counters. */
fc_status fc_solve(const fc_instance* instance, const char* method, double w_eff,
                   double lambda1, double lambda2, int64_t budget, fc_schedule** out,
                   char** diagnostics_json);

/* Scalarized joint objective of an existing single-round schedule. */
fc_status fc_scalarized_objective(const fc_instance* instance,
                                  const fc_schedule* schedule, double w_eff,
                                  double lambda1, double lambda2, double* out);

/* ---- metrics --------------------------------------------------------- */

fc_status fc_evaluate(const fc_instance* instance, const fc_schedule* schedule,
                      char** report_json);

/* ---- clustering ------------------------------------------------------ */

fc_status fc_cluster(const fc_instance* instance, int32_t k, uint64_t seed,
                     fc_instance** reduced, char** model_json);

/* ---- pipelines ------------------------------------------------------- */

/* sequence: 1-based group references, e.g. {1,2,3,1}. clusters <= 0 solves
 * on the full instance. */
fc_status fc_priority_run(const fc_instance* instance, int32_t groups,
                          const int32_t* sequence, int32_t sequence_len, double w_eff,
                          double lambda1, double lambda2, int32_t clusters,
                          uint64_t cluster_seed, fc_schedule** out);

/* method: "exact" | "rrfs". Emits the sweep CSV (full precision or 2
 * decimals) and a JSON mirror with per-participant/per-talk vectors; either
 * output pointer may be NULL. */
fc_status fc_sweep(const fc_instance* instance, const char* method,
                   const double* lambda1_grid, int32_t lambda1_count,
                   const double* lambda2_grid, int32_t lambda2_count, double w_eff,
                   int32_t jobs, int32_t csv_decimals, char** csv_out, char** json_out);

/* Baselines plus the given joint objective, one row each. */
fc_status fc_compare_methods(const fc_instance* instance, const char* method,
                             double w_eff, double lambda1, double lambda2,
                             int32_t csv_decimals, char** csv_out, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FAIRCONF_FAIRCONF_H_ */
