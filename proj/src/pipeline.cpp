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

#include "pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "clustering.hpp"
#include "errors.hpp"
#include "json_io.hpp"

namespace fairconf {

std::vector<std::vector<int>> PartitionByPriority(const SchedulingInstance& instance,
                                                  int groups) {
  if (groups < 1) Fail(ErrorCode::kInvalidArgument, "need at least one priority group");
  const std::size_t n = instance.num_talks();
  std::vector<double> interest_score(n, 0.0);
  for (std::size_t p = 0; p < instance.num_participants(); ++p)
    for (std::size_t t = 0; t < n; ++t)
      interest_score[t] += instance.weight(p) * instance.interest(p, t);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return interest_score[a] > interest_score[b];
  });

  const std::size_t g = std::min<std::size_t>(groups, n);
  std::vector<std::vector<int>> result(static_cast<std::size_t>(groups));
  const std::size_t base = n / g;
  const std::size_t remainder = n % g;
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < g; ++i) {
    const std::size_t size = base + (i < remainder ? 1 : 0);
    for (std::size_t j = 0; j < size; ++j) result[i].push_back(order[cursor++]);
  }
  return result;
}

MultiRoundSchedule RunPrioritySchedule(const SchedulingInstance& instance,
                                       const PriorityPlan& plan) {
  ValidateInstance(instance);
  ValidateObjective(plan.objective);
  if (plan.sequence.empty())
    Fail(ErrorCode::kInvalidArgument, "priority plan needs a non-empty round sequence");
  const auto groups = PartitionByPriority(instance, plan.groups);
  for (int round : plan.sequence)
    if (round < 1 || round > plan.groups)
      Fail(ErrorCode::kInvalidArgument, "round sequence references an unknown group");

  std::size_t demand = 0;
  for (int round : plan.sequence) demand += groups[round - 1].size();
  if (demand > instance.num_slots()) {
    std::ostringstream msg;
    msg << "round sequence needs " << demand << " slots but only "
        << instance.num_slots() << " exist";
    Fail(ErrorCode::kSlotsExhausted, msg.str());
  }

  // Rounds solve either on the instance itself or on a clustered reduction;
  // slots and talk indices are shared between the two.
  const SchedulingInstance* solving = &instance;
  SchedulingInstance reduced;
  if (plan.clusters > 0 && static_cast<std::size_t>(plan.clusters) <
                               instance.num_participants()) {
    const ClusterModel model =
        KMeans(BuildProfiles(instance), plan.clusters, plan.cluster_seed);
    reduced = ClusteredInstance(instance, model);
    solving = &reduced;
  }
  const Matrix crowd = CrowdMatrix(*solving);
  const std::vector<double> icg_full = AllIdealCumulativeGains(*solving);

  std::vector<int> free_slots(instance.num_slots());
  std::iota(free_slots.begin(), free_slots.end(), 0);

  MultiRoundSchedule result;
  for (int round : plan.sequence) {
    const std::vector<int>& talks = groups[round - 1];
    if (talks.empty()) continue;
    if (talks.size() > free_slots.size())
      Fail(ErrorCode::kSlotsExhausted,
           "group " + std::to_string(round) + " does not fit the remaining slots");
    Schedule scheduled = SolveRrfsOnView(*solving, plan.objective, crowd, icg_full,
                                         talks, free_slots, 1e-8, nullptr);
    std::vector<bool> used(instance.num_slots(), false);
    for (const auto& [t, s] : scheduled.assignment) used[s] = true;
    std::vector<int> next_free;
    for (int s : free_slots)
      if (!used[s]) next_free.push_back(s);
    free_slots = std::move(next_free);
    result.rounds.push_back(std::move(scheduled));
  }
  ValidateMultiRound(instance, result);
  return result;
}

namespace {

SweepRow SolveCell(const SchedulingInstance& instance, const std::string& method,
                   const JointObjective& objective, const std::string& label) {
  SweepRow row;
  row.method = label;
  row.w_eff = objective.w_eff;
  row.lambda1 = objective.lambda1;
  row.lambda2 = objective.lambda2;
  const auto started = std::chrono::steady_clock::now();
  try {
    SolveResult solved;
    if (label == "em") {
      solved = SolveEm(instance);
    } else if (label == "iam") {
      solved = SolveIam(instance);
    } else if (method == "exact") {
      solved = SolveExact(instance, objective);
    } else if (method == "rrfs") {
      solved = SolveRrfs(instance, objective);
    } else {
      Fail(ErrorCode::kInvalidArgument, "sweep method must be 'exact' or 'rrfs'");
    }
    row.schedule = MultiRoundSchedule::single(solved.schedule);
    row.report = ComputeMetrics(instance, row.schedule);
  } catch (const Error& error) {
    row.failed = true;
    row.error = std::string(ErrorCodeName(error.code())) + ": " + error.what();
  }
  row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  return row;
}

std::vector<SweepRow> BaselineRows(const SchedulingInstance& instance,
                                   const std::string& method) {
  std::vector<SweepRow> rows;
  rows.push_back(SolveCell(instance, method, {1.0, 0.0, 0.0}, "em"));
  rows.push_back(SolveCell(instance, method, {1.0, 0.0, 0.0}, "iam"));
  rows.push_back(SolveCell(instance, method, {0.0, 1.0, 0.0}, "pfair"));
  rows.push_back(SolveCell(instance, method, {0.0, 0.0, 1.0}, "sfair"));
  return rows;
}

}  // namespace

std::vector<SweepRow> RunSweep(const SchedulingInstance& instance,
                               const std::string& method,
                               const std::vector<double>& lambda1_grid,
                               const std::vector<double>& lambda2_grid, double w_eff,
                               int jobs) {
  ValidateInstance(instance);
  if (lambda1_grid.empty() || lambda2_grid.empty())
    Fail(ErrorCode::kInvalidArgument, "sweep grids must be non-empty");
  if (method != "exact" && method != "rrfs")
    Fail(ErrorCode::kInvalidArgument, "sweep method must be 'exact' or 'rrfs'");

  struct Cell {
    JointObjective objective;
  };
  std::vector<Cell> cells;
  for (double l2 : lambda2_grid)
    for (double l1 : lambda1_grid) cells.push_back({{w_eff, l1, l2}});

  std::vector<SweepRow> grid_rows(cells.size());
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      grid_rows[i] = SolveCell(instance, method, cells[i].objective, method);
  };
  if (jobs <= 1 || cells.size() <= 1) {
    run_range(0, cells.size());
  } else {
    const std::size_t workers = std::min<std::size_t>(jobs, cells.size());
    std::vector<std::thread> pool;
    const std::size_t chunk = (cells.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(cells.size(), begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (auto& worker : pool) worker.join();
  }

  std::vector<SweepRow> rows = std::move(grid_rows);
  for (auto& baseline : BaselineRows(instance, method)) rows.push_back(std::move(baseline));
  return rows;
}

std::vector<SweepRow> CompareMethods(const SchedulingInstance& instance,
                                     const JointObjective& objective,
                                     const std::string& method) {
  ValidateInstance(instance);
  ValidateObjective(objective);
  std::vector<SweepRow> rows = BaselineRows(instance, method);
  rows.push_back(SolveCell(instance, method, objective, "mfairconf"));
  return rows;
}

std::string RowsToCsv(const std::vector<SweepRow>& rows, int precision) {
  std::ostringstream out;
  out << MetricsCsvHeader() << "\n";
  for (const SweepRow& row : rows) {
    if (row.failed) {
      out << row.method << "," << row.w_eff << "," << row.lambda1 << "," << row.lambda2
          << "," << row.clusters << ",,,,,,,," << row.runtime_ms << "\n";
      continue;
    }
    out << MetricsCsvRow(row.method, row.w_eff, row.lambda1, row.lambda2, row.clusters,
                         row.report, row.runtime_ms, precision)
        << "\n";
  }
  return out.str();
}

std::string RowsToJson(const SchedulingInstance& instance,
                       const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& row : rows) {
    nlohmann::json entry;
    entry["method"] = row.method;
    entry["w_eff"] = row.w_eff;
    entry["lambda1"] = row.lambda1;
    entry["lambda2"] = row.lambda2;
    entry["k"] = row.clusters;
    entry["runtime_ms"] = row.runtime_ms;
    if (row.failed) {
      entry["error"] = row.error;
    } else {
      entry["metrics"] = nlohmann::json::parse(MetricsToJson(instance, row.report));
      entry["schedule"] = nlohmann::json::parse(ScheduleToJson(instance, row.schedule));
    }
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

}  // namespace fairconf
