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

#ifndef FAIRCONF_PIPELINE_HPP_
#define FAIRCONF_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metrics.hpp"
#include "model.hpp"
#include "solvers.hpp"

namespace fairconf {

// Talks ranked by overall interest and split into `groups` contiguous blocks
// of near-equal size (earlier blocks take the remainder). Returns talk
// indices per group, highest-interest group first.
std::vector<std::vector<int>> PartitionByPriority(const SchedulingInstance& instance,
                                                  int groups);

// Asynchronous multi-round plan: the sequence names groups (1-based) to
// schedule in order; repeating a group re-schedules fresh copies of its talks
// into the remaining slots. Rounds default to RRFS with `objective`.
// `clusters` > 0 solves the rounds on a participant-clustered reduction of
// the instance (metrics are still reported on the full instance).
struct PriorityPlan {
  int groups = 3;
  std::vector<int> sequence;  // e.g. {1, 2, 3, 1}
  JointObjective objective;
  int clusters = 0;
  std::uint64_t cluster_seed = 0;
};

MultiRoundSchedule RunPrioritySchedule(const SchedulingInstance& instance,
                                       const PriorityPlan& plan);

struct SweepRow {
  std::string method;
  double w_eff = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  int clusters = 0;
  bool failed = false;
  std::string error;  // set when a cell failed; metrics fields are empty then
  MetricsReport report;
  MultiRoundSchedule schedule;
  std::int64_t runtime_ms = 0;
};

// One row per (lambda1, lambda2) grid point solved with `method`
// ("exact" | "rrfs"), plus the four baseline rows (em, iam, pfair, sfair)
// computed once. Cells run independently across `jobs` threads; the row
// order is deterministic regardless of parallelism.
std::vector<SweepRow> RunSweep(const SchedulingInstance& instance,
                               const std::string& method,
                               const std::vector<double>& lambda1_grid,
                               const std::vector<double>& lambda2_grid, double w_eff,
                               int jobs = 1);

// Table-shaped comparison: em, iam, pfair, sfair and the joint objective,
// all reported with full metrics. PFair/SFair/mFairConf go through `method`.
std::vector<SweepRow> CompareMethods(const SchedulingInstance& instance,
                                     const JointObjective& objective,
                                     const std::string& method);

// CSV with the canonical column set; precision < 0 means full precision,
// otherwise fixed decimals (the human-readable variant uses 2).
std::string RowsToCsv(const std::vector<SweepRow>& rows, int precision = -1);
std::string RowsToJson(const SchedulingInstance& instance,
                       const std::vector<SweepRow>& rows);

}  // namespace fairconf

#endif  // FAIRCONF_PIPELINE_HPP_
