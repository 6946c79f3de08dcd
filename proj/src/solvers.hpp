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

#ifndef FAIRCONF_SOLVERS_HPP_
#define FAIRCONF_SOLVERS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "joint_lp.hpp"
#include "model.hpp"

namespace fairconf {

struct SolveResult {
  Schedule schedule;
  std::string method;
  JointObjective objective_spec;
  double objective = 0.0;  // scalarized value under objective_spec
  double tep = 0.0;
  // Diagnostics.
  long long enumeration_count = 0;  // exact
  int outer_iterations = 0;         // rrfs outer loops
  int lp_iterations = 0;            // rrfs simplex pivots, summed
};

// Evaluates the shared scalarization
//   w_eff * TEP / (W n) + lambda1 (min NCG - max NCG) + lambda2 (min NEC - max NEC)
// with W the total participant weight; degenerate participants/talks are
// skipped in the min/max terms.
double ScalarizedObjective(const SchedulingInstance& instance, const Schedule& schedule,
                           const JointObjective& objective);

// Efficiency maximization as min-cost matching: costs W - crowd(t,s), padded
// to l-by-l with constant-cost dummy talks.
SolveResult SolveEm(const SchedulingInstance& instance);

// Rank matching: k-th most interesting talk into the k-th most available
// slot, ties by index.
SolveResult SolveIam(const SchedulingInstance& instance);

// Exhaustive search over all injective assignments, lexicographic tie-break.
// Throws BudgetExceeded when l!/(l-n)! > budget.
SolveResult SolveExact(const SchedulingInstance& instance, const JointObjective& objective,
                       long long budget = 5'000'000);

// Repeated rounding of fractional solutions: solve the relaxed joint LP,
// greedily fix the largest entries, re-solve on the residual until every
// talk is placed. ICG normalizers stay global across residual re-solves;
// IEC is recomputed over the remaining slots.
SolveResult SolveRrfs(const SchedulingInstance& instance, const JointObjective& objective,
                      double tolerance = 1e-8);

// RRFS over a (talks, slots) view; building block for priority rounds.
// `crowd` is the full CrowdMatrix of `instance`, `icg_full` its global ICGs.
Schedule SolveRrfsOnView(const SchedulingInstance& instance,
                         const JointObjective& objective, const Matrix& crowd,
                         const std::vector<double>& icg_full, std::vector<int> talks,
                         std::vector<int> slots, double tolerance, SolveResult* diag);

}  // namespace fairconf

#endif  // FAIRCONF_SOLVERS_HPP_
