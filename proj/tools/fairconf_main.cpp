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

// Command-line front end. Everything goes through the C API in
// fairconf/fairconf.h; this file owns only flag parsing and file writes.
//
// Exit codes: 0 success, 2 validation/usage errors, 3 solver errors.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairconf/fairconf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSolver = 3;

int g_log_level = 0;  // 0 error, 1 info, 2 debug

void InitLogLevel() {
  const char* env = std::getenv("FAIRCONF_LOG");
  if (!env) return;
  const std::string level = env;
  if (level == "info") g_log_level = 1;
  if (level == "debug") g_log_level = 2;
}

void LogInfo(const std::string& message) {
  if (g_log_level >= 1) std::cerr << "[info] " << message << "\n";
}

int ExitCodeFor(fc_status status) {
  switch (status) {
    case FC_OK:
      return kExitOk;
    case FC_ERR_BUDGET_EXCEEDED:
    case FC_ERR_SLOTS_EXHAUSTED:
    case FC_ERR_INFEASIBLE:
    case FC_ERR_NUMERICAL:
    case FC_ERR_DEGENERATE_NORMALIZATION:
    case FC_ERR_ALL_ZERO:
      return kExitSolver;
    default:
      return kExitValidation;
  }
}

// Machine-readable error JSON on stderr, as scripts expect.
int ReportError(fc_status status) {
  std::ostringstream out;
  out << "{\"error\":{\"code\":\"" << fc_status_name(status) << "\",\"message\":\"";
  for (const char* c = fc_last_error_message(); *c; ++c) {
    if (*c == '"' || *c == '\\') out << '\\';
    if (*c == '\n') {
      out << "\\n";
      continue;
    }
    out << *c;
  }
  out << "\"}}";
  std::cerr << out.str() << "\n";
  return ExitCodeFor(status);
}

int ReportUsageError(const std::string& message) {
  std::cerr << "{\"error\":{\"code\":\"InvalidArgument\",\"message\":\"" << message
            << "\"}}\n";
  return kExitValidation;
}

bool WriteFileOrFail(const std::string& path, const char* content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

struct StringGuard {
  char* value = nullptr;
  ~StringGuard() { fc_string_free(value); }
};

struct InstanceGuard {
  fc_instance* value = nullptr;
  ~InstanceGuard() { fc_instance_free(value); }
};

struct ScheduleGuard {
  fc_schedule* value = nullptr;
  ~ScheduleGuard() { fc_schedule_free(value); }
};

std::vector<double> ParseDoubleList(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    values.push_back(std::stod(item));
  }
  return values;
}

std::vector<std::int64_t> ParseIntList(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    values.push_back(std::stoll(item));
  }
  return values;
}

std::string ReadScheduleFile(const std::string& path, bool* ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    *ok = false;
    return "";
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  *ok = true;
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  InitLogLevel();
  CLI::App app{"fairconf: fair virtual-conference scheduling"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "write a synthetic instance");
  std::string gen_kind = "uniform";
  int gen_m = 10, gen_n = 10, gen_l = 10;
  std::uint64_t gen_seed = 0;
  std::string gen_partition;
  std::string gen_out;
  std::string gen_format = "json";
  bool gen_stdout = false;
  generate->add_option("--kind", gen_kind, "uniform | fatrec | recsys | partition");
  generate->add_option("--m", gen_m, "participants (uniform)");
  generate->add_option("--n", gen_n, "talks (uniform)");
  generate->add_option("--l", gen_l, "slots (uniform)");
  generate->add_option("--seed", gen_seed, "generator seed");
  generate->add_option("--partition", gen_partition, "comma list of positive integers");
  generate->add_option("--out", gen_out, "output path");
  generate->add_option("--format", gen_format, "json | csv-triplet");
  generate->add_flag("--stdout", gen_stdout, "print the instance JSON to stdout");

  // schedule
  auto* schedule = app.add_subcommand("schedule", "solve one instance");
  std::string sch_instance, sch_format = "json", sch_method;
  double sch_w_eff = 1.0, sch_l1 = 0.0, sch_l2 = 0.0;
  bool sch_has_l1 = false, sch_has_l2 = false;
  std::int64_t sch_budget = 0;
  int sch_clusters = 0;
  std::uint64_t sch_cluster_seed = 0;
  std::string sch_out_schedule, sch_out_metrics;
  bool sch_stdout = false;
  schedule->add_option("--instance", sch_instance, "instance path")->required();
  schedule->add_option("--format", sch_format, "instance format");
  schedule
      ->add_option("--method", sch_method,
                   "em | iam | pfair | sfair | mfairconf | exact | rrfs")
      ->required();
  schedule->add_option("--w-eff", sch_w_eff, "efficiency weight");
  schedule->add_option("--lambda1", sch_l1, "participant fairness weight")
      ->trigger_on_parse()
      ->each([&](const std::string&) { sch_has_l1 = true; });
  schedule->add_option("--lambda2", sch_l2, "speaker fairness weight")
      ->trigger_on_parse()
      ->each([&](const std::string&) { sch_has_l2 = true; });
  schedule->add_option("--budget", sch_budget, "enumeration budget (exact)");
  schedule->add_option("--clusters", sch_clusters, "participant clusters for the solve");
  schedule->add_option("--cluster-seed", sch_cluster_seed, "clustering seed");
  schedule->add_option("--out-schedule", sch_out_schedule, "schedule JSON path");
  schedule->add_option("--out-metrics", sch_out_metrics, "metrics JSON path");
  schedule->add_flag("--stdout", sch_stdout, "print metrics JSON to stdout");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "metrics for an existing schedule");
  std::string eval_instance, eval_format = "json", eval_schedule, eval_out;
  bool eval_stdout = false;
  evaluate->add_option("--instance", eval_instance, "instance path")->required();
  evaluate->add_option("--format", eval_format, "instance format");
  evaluate->add_option("--schedule", eval_schedule, "schedule JSON path")->required();
  evaluate->add_option("--out-metrics", eval_out, "metrics JSON path");
  evaluate->add_flag("--stdout", eval_stdout, "print metrics JSON to stdout");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "lambda grid plus baselines");
  std::string swe_instance, swe_format = "json", swe_method = "rrfs";
  std::string swe_l1, swe_l2;
  double swe_w_eff = 1.0;
  int swe_jobs = 1, swe_decimals = 2;
  std::string swe_out, swe_out_json;
  bool swe_stdout = false;
  sweep->add_option("--instance", swe_instance, "instance path")->required();
  sweep->add_option("--format", swe_format, "instance format");
  sweep->add_option("--method", swe_method, "exact | rrfs");
  sweep->add_option("--l1", swe_l1, "lambda1 grid, comma separated")->required();
  sweep->add_option("--l2", swe_l2, "lambda2 grid, comma separated")->required();
  sweep->add_option("--w-eff", swe_w_eff, "efficiency weight");
  sweep->add_option("--jobs", swe_jobs, "concurrent grid cells");
  sweep->add_option("--decimals", swe_decimals, "CSV decimals (-1 = full precision)");
  sweep->add_option("--out", swe_out, "CSV path");
  sweep->add_option("--out-json", swe_out_json, "JSON mirror path");
  sweep->add_flag("--stdout", swe_stdout, "print the CSV to stdout");

  // priority
  auto* priority = app.add_subcommand("priority", "multi-round priority scheduling");
  std::string pri_instance, pri_format = "json", pri_sequence = "1,2,3";
  int pri_groups = 3;
  double pri_w_eff = 1.0, pri_l1 = 0.0, pri_l2 = 0.0;
  int pri_clusters = 0;
  std::uint64_t pri_cluster_seed = 0;
  std::string pri_out_schedule, pri_out_metrics;
  bool pri_stdout = false;
  priority->add_option("--instance", pri_instance, "instance path")->required();
  priority->add_option("--format", pri_format, "instance format");
  priority->add_option("--groups", pri_groups, "number of priority groups");
  priority->add_option("--sequence", pri_sequence, "round sequence, e.g. 1,2,3,1");
  priority->add_option("--w-eff", pri_w_eff, "efficiency weight");
  priority->add_option("--lambda1", pri_l1, "participant fairness weight");
  priority->add_option("--lambda2", pri_l2, "speaker fairness weight");
  priority->add_option("--clusters", pri_clusters, "participant clusters for the rounds");
  priority->add_option("--cluster-seed", pri_cluster_seed, "clustering seed");
  priority->add_option("--out-schedule", pri_out_schedule, "schedule JSON path");
  priority->add_option("--out-metrics", pri_out_metrics, "metrics JSON path");
  priority->add_flag("--stdout", pri_stdout, "print the schedule JSON to stdout");

  // cluster
  auto* cluster = app.add_subcommand("cluster", "participant clustering");
  std::string clu_instance, clu_format = "json", clu_out, clu_model_out;
  int clu_k = 0;
  std::uint64_t clu_seed = 0;
  bool clu_stdout = false;
  cluster->add_option("--instance", clu_instance, "instance path")->required();
  cluster->add_option("--format", clu_format, "instance format");
  cluster->add_option("--clusters", clu_k, "cluster count")->required();
  cluster->add_option("--cluster-seed", clu_seed, "clustering seed");
  cluster->add_option("--out", clu_out, "reduced instance JSON path");
  cluster->add_option("--model-out", clu_model_out, "cluster model JSON path");
  cluster->add_flag("--stdout", clu_stdout, "print the reduced instance to stdout");

  // compare
  auto* compare = app.add_subcommand("compare", "baseline table for one objective");
  std::string cmp_instance, cmp_format = "json", cmp_method = "rrfs";
  double cmp_w_eff = 1.0, cmp_l1 = 0.5, cmp_l2 = 0.5;
  int cmp_decimals = 2;
  std::string cmp_out, cmp_out_json;
  bool cmp_stdout = false;
  compare->add_option("--instance", cmp_instance, "instance path")->required();
  compare->add_option("--format", cmp_format, "instance format");
  compare->add_option("--method", cmp_method, "exact | rrfs");
  compare->add_option("--w-eff", cmp_w_eff, "efficiency weight");
  compare->add_option("--lambda1", cmp_l1, "participant fairness weight");
  compare->add_option("--lambda2", cmp_l2, "speaker fairness weight");
  compare->add_option("--decimals", cmp_decimals, "CSV decimals (-1 = full precision)");
  compare->add_option("--out", cmp_out, "CSV path");
  compare->add_option("--out-json", cmp_out_json, "JSON mirror path");
  compare->add_flag("--stdout", cmp_stdout, "print the CSV to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return kExitValidation;
  }

  if (generate->parsed()) {
    InstanceGuard instance;
    fc_status status = FC_OK;
    if (gen_kind == "uniform") {
      status = fc_generate_uniform(gen_m, gen_n, gen_l, gen_seed, &instance.value);
    } else if (gen_kind == "fatrec" || gen_kind == "recsys") {
      status = fc_generate_preset(gen_kind.c_str(), gen_seed, &instance.value);
    } else if (gen_kind == "partition") {
      const auto numbers = ParseIntList(gen_partition);
      if (numbers.empty())
        return ReportUsageError("--partition needs a comma list of integers");
      status = fc_generate_partition(numbers.data(),
                                     static_cast<int32_t>(numbers.size()),
                                     &instance.value);
    } else {
      return ReportUsageError("unknown --kind '" + gen_kind + "'");
    }
    if (status != FC_OK) return ReportError(status);
    if (!gen_out.empty()) {
      status = fc_instance_save(instance.value, gen_out.c_str(), gen_format.c_str());
      if (status != FC_OK) return ReportError(status);
      LogInfo("wrote instance to " + gen_out);
    }
    if (gen_stdout || gen_out.empty()) {
      StringGuard text;
      status = fc_instance_to_json(instance.value, &text.value);
      if (status != FC_OK) return ReportError(status);
      std::cout << text.value;
    }
    return kExitOk;
  }

  if (schedule->parsed()) {
    const bool needs_lambdas =
        sch_method == "mfairconf" || sch_method == "exact" || sch_method == "rrfs";
    if (needs_lambdas && (!sch_has_l1 || !sch_has_l2)) {
      std::cerr << schedule->help() << "\n";
      return ReportUsageError("--method " + sch_method +
                              " requires --lambda1 and --lambda2");
    }
    InstanceGuard instance;
    fc_status status =
        fc_instance_load(sch_instance.c_str(), sch_format.c_str(), &instance.value);
    if (status != FC_OK) return ReportError(status);

    const fc_instance* solve_on = instance.value;
    InstanceGuard reduced;
    if (sch_clusters > 0) {
      status = fc_cluster(instance.value, sch_clusters, sch_cluster_seed,
                          &reduced.value, nullptr);
      if (status != FC_OK) return ReportError(status);
      solve_on = reduced.value;
      LogInfo("solving on " + std::to_string(sch_clusters) + " participant clusters");
    }

    ScheduleGuard solved;
    StringGuard diagnostics;
    status = fc_solve(solve_on, sch_method.c_str(), sch_w_eff, sch_l1, sch_l2,
                      sch_budget, &solved.value, &diagnostics.value);
    if (status != FC_OK) return ReportError(status);
    LogInfo(std::string("solver diagnostics: ") + diagnostics.value);

    StringGuard schedule_json;
    status = fc_schedule_to_json(instance.value, solved.value, &schedule_json.value);
    if (status != FC_OK) return ReportError(status);
    StringGuard metrics_json;
    status = fc_evaluate(instance.value, solved.value, &metrics_json.value);
    if (status != FC_OK) return ReportError(status);

    if (!sch_out_schedule.empty() &&
        !WriteFileOrFail(sch_out_schedule, schedule_json.value))
      return ReportUsageError("cannot write " + sch_out_schedule);
    if (!sch_out_metrics.empty() && !WriteFileOrFail(sch_out_metrics, metrics_json.value))
      return ReportUsageError("cannot write " + sch_out_metrics);
    if (sch_stdout || (sch_out_schedule.empty() && sch_out_metrics.empty()))
      std::cout << metrics_json.value;
    return kExitOk;
  }

  if (evaluate->parsed()) {
    InstanceGuard instance;
    fc_status status =
        fc_instance_load(eval_instance.c_str(), eval_format.c_str(), &instance.value);
    if (status != FC_OK) return ReportError(status);
    bool ok = false;
    const std::string text = ReadScheduleFile(eval_schedule, &ok);
    if (!ok) return ReportUsageError("cannot read " + eval_schedule);
    ScheduleGuard loaded;
    status = fc_schedule_from_json(instance.value, text.c_str(), &loaded.value);
    if (status != FC_OK) return ReportError(status);
    StringGuard metrics_json;
    status = fc_evaluate(instance.value, loaded.value, &metrics_json.value);
    if (status != FC_OK) return ReportError(status);
    if (!eval_out.empty() && !WriteFileOrFail(eval_out, metrics_json.value))
      return ReportUsageError("cannot write " + eval_out);
    if (eval_stdout || eval_out.empty()) std::cout << metrics_json.value;
    return kExitOk;
  }

  if (sweep->parsed()) {
    const auto grid1 = ParseDoubleList(swe_l1);
    const auto grid2 = ParseDoubleList(swe_l2);
    InstanceGuard instance;
    fc_status status =
        fc_instance_load(swe_instance.c_str(), swe_format.c_str(), &instance.value);
    if (status != FC_OK) return ReportError(status);
    StringGuard csv, json;
    status = fc_sweep(instance.value, swe_method.c_str(), grid1.data(),
                      static_cast<int32_t>(grid1.size()), grid2.data(),
                      static_cast<int32_t>(grid2.size()), swe_w_eff, swe_jobs,
                      swe_decimals, &csv.value, &json.value);
    if (status != FC_OK) return ReportError(status);
    if (!swe_out.empty() && !WriteFileOrFail(swe_out, csv.value))
      return ReportUsageError("cannot write " + swe_out);
    if (!swe_out_json.empty() && !WriteFileOrFail(swe_out_json, json.value))
      return ReportUsageError("cannot write " + swe_out_json);
    if (swe_stdout || swe_out.empty()) std::cout << csv.value;
    return kExitOk;
  }

  if (priority->parsed()) {
    InstanceGuard instance;
    fc_status status =
        fc_instance_load(pri_instance.c_str(), pri_format.c_str(), &instance.value);
    if (status != FC_OK) return ReportError(status);
    const auto sequence64 = ParseIntList(pri_sequence);
    if (sequence64.empty()) return ReportUsageError("--sequence must be non-empty");
    std::vector<int32_t> sequence(sequence64.begin(), sequence64.end());
    ScheduleGuard solved;
    status = fc_priority_run(instance.value, pri_groups, sequence.data(),
                             static_cast<int32_t>(sequence.size()), pri_w_eff, pri_l1,
                             pri_l2, pri_clusters, pri_cluster_seed, &solved.value);
    if (status != FC_OK) return ReportError(status);
    StringGuard schedule_json, metrics_json;
    status = fc_schedule_to_json(instance.value, solved.value, &schedule_json.value);
    if (status != FC_OK) return ReportError(status);
    status = fc_evaluate(instance.value, solved.value, &metrics_json.value);
    if (status != FC_OK) return ReportError(status);
    if (!pri_out_schedule.empty() &&
        !WriteFileOrFail(pri_out_schedule, schedule_json.value))
      return ReportUsageError("cannot write " + pri_out_schedule);
    if (!pri_out_metrics.empty() && !WriteFileOrFail(pri_out_metrics, metrics_json.value))
      return ReportUsageError("cannot write " + pri_out_metrics);
    if (pri_stdout || (pri_out_schedule.empty() && pri_out_metrics.empty()))
      std::cout << schedule_json.value;
    return kExitOk;
  }

  if (cluster->parsed()) {
    InstanceGuard instance;
    fc_status status =
        fc_instance_load(clu_instance.c_str(), clu_format.c_str(), &instance.value);
    if (status != FC_OK) return ReportError(status);
    InstanceGuard reduced;
    StringGuard model;
    status = fc_cluster(instance.value, clu_k, clu_seed, &reduced.value, &model.value);
    if (status != FC_OK) return ReportError(status);
    StringGuard reduced_json;
    status = fc_instance_to_json(reduced.value, &reduced_json.value);
    if (status != FC_OK) return ReportError(status);
    if (!clu_out.empty() && !WriteFileOrFail(clu_out, reduced_json.value))
      return ReportUsageError("cannot write " + clu_out);
    if (!clu_model_out.empty() && !WriteFileOrFail(clu_model_out, model.value))
      return ReportUsageError("cannot write " + clu_model_out);
    if (clu_stdout || clu_out.empty()) std::cout << reduced_json.value;
    return kExitOk;
  }

  if (compare->parsed()) {
    InstanceGuard instance;
    fc_status status =
        fc_instance_load(cmp_instance.c_str(), cmp_format.c_str(), &instance.value);
    if (status != FC_OK) return ReportError(status);
    StringGuard csv, json;
    status = fc_compare_methods(instance.value, cmp_method.c_str(), cmp_w_eff, cmp_l1,
                                cmp_l2, cmp_decimals, &csv.value, &json.value);
    if (status != FC_OK) return ReportError(status);
    if (!cmp_out.empty() && !WriteFileOrFail(cmp_out, csv.value))
      return ReportUsageError("cannot write " + cmp_out);
    if (!cmp_out_json.empty() && !WriteFileOrFail(cmp_out_json, json.value))
      return ReportUsageError("cannot write " + cmp_out_json);
    if (cmp_stdout || cmp_out.empty()) std::cout << csv.value;
    return kExitOk;
  }

  return ReportUsageError("no subcommand given");
}
