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

#ifndef FAIRCONF_LP_HPP_
#define FAIRCONF_LP_HPP_

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace fairconf {

enum class Relation { kLe, kEq, kGe };

struct LinearConstraint {
  std::vector<std::pair<int, double>> terms;  // (variable, coefficient), sparse
  Relation relation = Relation::kLe;
  double rhs = 0.0;
};

// An explicit maximization LP with per-variable bounds. Kept as a plain
// struct so tests can poke at it (duplicate columns, count rows, dump it).
struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;  // maximize objective . x
  std::vector<double> lower;
  std::vector<double> upper;  // +infinity allowed
  std::vector<LinearConstraint> constraints;

  int AddVariable(double lb, double ub, double objective_coeff);
  void AddConstraint(LinearConstraint constraint);

  // Plain-text rows/columns listing for cross-checking with external tools.
  std::string Dump() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* LpStatusName(LpStatus status);

struct SimplexResult {
  LpStatus status = LpStatus::kIterationLimit;
  std::vector<double> x;
  double objective = 0.0;
  // Optimality certificate: largest constraint/bound violation and largest
  // improving reduced cost left at termination. Both must sit within the
  // tolerance for kOptimal.
  double max_primal_violation = 0.0;
  double max_dual_violation = 0.0;
  int iterations = 0;
};

// Two-phase primal simplex on a dense tableau with bounded variables.
// Pivoting uses the largest-reduced-cost rule and falls back to Bland's rule
// after a run of degenerate steps, which guarantees termination.
SimplexResult SolveSimplex(const LinearProgram& lp, double tolerance = 1e-8,
                           long long max_iterations = -1);

constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace fairconf

#endif  // FAIRCONF_LP_HPP_
