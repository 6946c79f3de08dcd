// Copyright 2026 The FairConf Authors
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

#include "fairconf/fairconf.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "clustering.hpp"
#include "datagen.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "metrics.hpp"
#include "model.hpp"
#include "pipeline.hpp"
#include "solvers.hpp"

struct fc_instance {
  fairconf::SchedulingInstance value;
};

struct fc_schedule {
  fairconf::MultiRoundSchedule value;
};

namespace {

thread_local std::string g_last_error = "";

fc_status StatusFromCode(fairconf::ErrorCode code) {
  using fairconf::ErrorCode;
  switch (code) {
    case ErrorCode::kDimensionMismatch: return FC_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kRangeViolation: return FC_ERR_RANGE_VIOLATION;
    case ErrorCode::kSlotOverlap: return FC_ERR_SLOT_OVERLAP;
    case ErrorCode::kTooManyTalks: return FC_ERR_TOO_MANY_TALKS;
    case ErrorCode::kParseError: return FC_ERR_PARSE;
    case ErrorCode::kIoError: return FC_ERR_IO;
    case ErrorCode::kUnknownTalkId: return FC_ERR_UNKNOWN_TALK_ID;
    case ErrorCode::kUnknownSlotId: return FC_ERR_UNKNOWN_SLOT_ID;
    case ErrorCode::kInvalidDims: return FC_ERR_INVALID_DIMS;
    case ErrorCode::kDegenerateNormalization: return FC_ERR_DEGENERATE_NORMALIZATION;
    case ErrorCode::kAllZero: return FC_ERR_ALL_ZERO;
    case ErrorCode::kBudgetExceeded: return FC_ERR_BUDGET_EXCEEDED;
    case ErrorCode::kSlotsExhausted: return FC_ERR_SLOTS_EXHAUSTED;
    case ErrorCode::kInfeasible: return FC_ERR_INFEASIBLE;
    case ErrorCode::kNumericalFailure: return FC_ERR_NUMERICAL;
    case ErrorCode::kInvalidArgument: return FC_ERR_INVALID_ARGUMENT;
  }
  return FC_ERR_INTERNAL;
}

template <typename Fn>
fc_status Guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return FC_OK;
  } catch (const fairconf::Error& error) {
    g_last_error = error.what();
    return StatusFromCode(error.code());
  } catch (const std::exception& error) {
    g_last_error = error.what();
    return FC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return FC_ERR_INTERNAL;
  }
}

char* CopyString(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

fc_status RequireArgs(bool ok) {
  if (!ok) {
    g_last_error = "null argument";
    return FC_ERR_INVALID_ARGUMENT;
  }
  return FC_OK;
}

fairconf::JointObjective MethodObjective(const std::string& method, double w_eff,
                                         double lambda1, double lambda2) {
  if (method == "em" || method == "iam") return {1.0, 0.0, 0.0};
  if (method == "pfair") return {0.0, 1.0, 0.0};
  if (method == "sfair") return {0.0, 0.0, 1.0};
  return {w_eff, lambda1, lambda2};
}

}  // namespace

extern "C" {

const char* fc_version(void) { return "1.0.0"; }

const char* fc_last_error_message(void) { return g_last_error.c_str(); }

const char* fc_status_name(fc_status status) {
  switch (status) {
    case FC_OK: return "Ok";
    case FC_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case FC_ERR_RANGE_VIOLATION: return "RangeViolation";
    case FC_ERR_SLOT_OVERLAP: return "SlotOverlap";
    case FC_ERR_TOO_MANY_TALKS: return "TooManyTalks";
    case FC_ERR_PARSE: return "ParseError";
    case FC_ERR_IO: return "IoError";
    case FC_ERR_UNKNOWN_TALK_ID: return "UnknownTalkId";
    case FC_ERR_UNKNOWN_SLOT_ID: return "UnknownSlotId";
    case FC_ERR_INVALID_DIMS: return "InvalidDims";
    case FC_ERR_DEGENERATE_NORMALIZATION: return "DegenerateNormalization";
    case FC_ERR_ALL_ZERO: return "AllZero";
    case FC_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case FC_ERR_SLOTS_EXHAUSTED: return "SlotsExhausted";
    case FC_ERR_INFEASIBLE: return "Infeasible";
    case FC_ERR_NUMERICAL: return "NumericalFailure";
    case FC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case FC_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

void fc_string_free(char* text) { delete[] text; }
void fc_instance_free(fc_instance* instance) { delete instance; }
void fc_schedule_free(fc_schedule* schedule) { delete schedule; }

fc_status fc_instance_load(const char* path, const char* format, fc_instance** out) {
  if (fc_status bad = RequireArgs(path && format && out)) return bad;
  return Guard([&] {
    auto instance = fairconf::LoadInstance(path, fairconf::ParseInstanceFormat(format));
    *out = new fc_instance{std::move(instance)};
  });
}

fc_status fc_instance_from_json(const char* text, fc_instance** out) {
  if (fc_status bad = RequireArgs(text && out)) return bad;
  return Guard([&] { *out = new fc_instance{fairconf::InstanceFromJson(text)}; });
}

fc_status fc_instance_to_json(const fc_instance* instance, char** out) {
  if (fc_status bad = RequireArgs(instance && out)) return bad;
  return Guard([&] { *out = CopyString(fairconf::InstanceToJson(instance->value)); });
}

fc_status fc_instance_save(const fc_instance* instance, const char* path,
                           const char* format) {
  if (fc_status bad = RequireArgs(instance && path && format)) return bad;
  return Guard([&] {
    fairconf::SaveInstance(instance->value, path, fairconf::ParseInstanceFormat(format));
  });
}

fc_status fc_instance_counts(const fc_instance* instance, int32_t* participants,
                             int32_t* talks, int32_t* slots) {
  if (fc_status bad = RequireArgs(instance != nullptr)) return bad;
  if (participants) *participants = static_cast<int32_t>(instance->value.num_participants());
  if (talks) *talks = static_cast<int32_t>(instance->value.num_talks());
  if (slots) *slots = static_cast<int32_t>(instance->value.num_slots());
  g_last_error.clear();
  return FC_OK;
}

fc_status fc_generate_uniform(int32_t m, int32_t n, int32_t l, uint64_t seed,
                              fc_instance** out) {
  if (fc_status bad = RequireArgs(out != nullptr)) return bad;
  return Guard([&] {
    if (m < 1 || n < 1 || l < 1)
      fairconf::Fail(fairconf::ErrorCode::kInvalidDims, "m, n, l must be positive");
    *out = new fc_instance{fairconf::GenUniform(m, n, l, seed)};
  });
}

fc_status fc_generate_preset(const char* name, uint64_t seed, fc_instance** out) {
  if (fc_status bad = RequireArgs(name && out)) return bad;
  return Guard([&] { *out = new fc_instance{fairconf::GenPreset(name, seed)}; });
}

fc_status fc_generate_partition(const int64_t* numbers, int32_t count, fc_instance** out) {
  if (fc_status bad = RequireArgs(numbers && out && count > 0)) return bad;
  return Guard([&] {
    std::vector<std::int64_t> group(numbers, numbers + count);
    *out = new fc_instance{fairconf::GenPartitionInstance(group)};
  });
}

fc_status fc_schedule_from_json(const fc_instance* instance, const char* text,
                                fc_schedule** out) {
  if (fc_status bad = RequireArgs(instance && text && out)) return bad;
  return Guard(
      [&] { *out = new fc_schedule{fairconf::ScheduleFromJson(instance->value, text)}; });
}

fc_status fc_schedule_to_json(const fc_instance* instance, const fc_schedule* schedule,
                              char** out) {
  if (fc_status bad = RequireArgs(instance && schedule && out)) return bad;
  return Guard([&] {
    *out = CopyString(fairconf::ScheduleToJson(instance->value, schedule->value));
  });
}

fc_status fc_solve(const fc_instance* instance, const char* method, double w_eff,
                   double lambda1, double lambda2, int64_t budget, fc_schedule** out,
                   char** diagnostics_json) {
  if (fc_status bad = RequireArgs(instance && method && out)) return bad;
  return Guard([&] {
    const std::string name = method;
    const fairconf::JointObjective objective =
        MethodObjective(name, w_eff, lambda1, lambda2);
    fairconf::SolveResult solved;
    if (name == "em") {
      solved = fairconf::SolveEm(instance->value);
    } else if (name == "iam") {
      solved = fairconf::SolveIam(instance->value);
    } else if (name == "exact") {
      solved = budget > 0 ? fairconf::SolveExact(instance->value, objective, budget)
                          : fairconf::SolveExact(instance->value, objective);
    } else if (name == "pfair" || name == "sfair" || name == "mfairconf" ||
               name == "rrfs") {
      solved = fairconf::SolveRrfs(instance->value, objective);
      solved.method = name == "rrfs" ? "rrfs" : name;
    } else {
      fairconf::Fail(fairconf::ErrorCode::kInvalidArgument,
                     "unknown method '" + name + "'");
    }
    if (diagnostics_json) {
      nlohmann::json diag;
      diag["method"] = solved.method;
      diag["objective"] = solved.objective;
      diag["tep"] = solved.tep;
      diag["w_eff"] = solved.objective_spec.w_eff;
      diag["lambda1"] = solved.objective_spec.lambda1;
      diag["lambda2"] = solved.objective_spec.lambda2;
      diag["enumeration_count"] = solved.enumeration_count;
      diag["rrfs_outer_iterations"] = solved.outer_iterations;
      diag["lp_iterations"] = solved.lp_iterations;
      *diagnostics_json = CopyString(diag.dump(2) + "\n");
    }
    *out = new fc_schedule{fairconf::MultiRoundSchedule::single(solved.schedule)};
  });
}

fc_status fc_scalarized_objective(const fc_instance* instance,
                                  const fc_schedule* schedule, double w_eff,
                                  double lambda1, double lambda2, double* out) {
  if (fc_status bad = RequireArgs(instance && schedule && out)) return bad;
  return Guard([&] {
    if (!schedule->value.is_single_round())
      fairconf::Fail(fairconf::ErrorCode::kInvalidArgument,
                     "scalarized objective is defined for single-round schedules");
    *out = fairconf::ScalarizedObjective(instance->value, schedule->value.rounds[0],
                                         {w_eff, lambda1, lambda2});
  });
}

fc_status fc_evaluate(const fc_instance* instance, const fc_schedule* schedule,
                      char** report_json) {
  if (fc_status bad = RequireArgs(instance && schedule && report_json)) return bad;
  return Guard([&] {
    const auto report = fairconf::ComputeMetrics(instance->value, schedule->value);
    *report_json = CopyString(fairconf::MetricsToJson(instance->value, report));
  });
}

fc_status fc_cluster(const fc_instance* instance, int32_t k, uint64_t seed,
                     fc_instance** reduced, char** model_json) {
  if (fc_status bad = RequireArgs(instance && reduced)) return bad;
  return Guard([&] {
    const auto model =
        fairconf::KMeans(fairconf::BuildProfiles(instance->value), k, seed);
    *reduced = new fc_instance{fairconf::ClusteredInstance(instance->value, model)};
    if (model_json)
      *model_json = CopyString(fairconf::ClusterModelToJson(instance->value, model));
  });
}

fc_status fc_priority_run(const fc_instance* instance, int32_t groups,
                          const int32_t* sequence, int32_t sequence_len, double w_eff,
                          double lambda1, double lambda2, int32_t clusters,
                          uint64_t cluster_seed, fc_schedule** out) {
  if (fc_status bad = RequireArgs(instance && sequence && out && sequence_len > 0))
    return bad;
  return Guard([&] {
    fairconf::PriorityPlan plan;
    plan.groups = groups;
    plan.sequence.assign(sequence, sequence + sequence_len);
    plan.objective = {w_eff, lambda1, lambda2};
    plan.clusters = clusters;
    plan.cluster_seed = cluster_seed;
    *out = new fc_schedule{fairconf::RunPrioritySchedule(instance->value, plan)};
  });
}

fc_status fc_sweep(const fc_instance* instance, const char* method,
                   const double* lambda1_grid, int32_t lambda1_count,
                   const double* lambda2_grid, int32_t lambda2_count, double w_eff,
                   int32_t jobs, int32_t csv_decimals, char** csv_out, char** json_out) {
  if (fc_status bad = RequireArgs(instance && method)) return bad;
  return Guard([&] {
    std::vector<double> grid1, grid2;
    if (lambda1_grid) grid1.assign(lambda1_grid, lambda1_grid + lambda1_count);
    if (lambda2_grid) grid2.assign(lambda2_grid, lambda2_grid + lambda2_count);
    const auto rows =
        fairconf::RunSweep(instance->value, method, grid1, grid2, w_eff, jobs);
    if (csv_out) *csv_out = CopyString(fairconf::RowsToCsv(rows, csv_decimals));
    if (json_out) *json_out = CopyString(fairconf::RowsToJson(instance->value, rows));
  });
}

fc_status fc_compare_methods(const fc_instance* instance, const char* method,
                             double w_eff, double lambda1, double lambda2,
                             int32_t csv_decimals, char** csv_out, char** json_out) {
  if (fc_status bad = RequireArgs(instance && method)) return bad;
  return Guard([&] {
    const auto rows = fairconf::CompareMethods(instance->value,
                                               {w_eff, lambda1, lambda2}, method);
    if (csv_out) *csv_out = CopyString(fairconf::RowsToCsv(rows, csv_decimals));
    if (json_out) *json_out = CopyString(fairconf::RowsToJson(instance->value, rows));
  });
}

}  // extern "C"
