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

#include "lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace fairconf {

int LinearProgram::AddVariable(double lb, double ub, double objective_coeff) {
  lower.push_back(lb);
  upper.push_back(ub);
  objective.push_back(objective_coeff);
  return num_vars++;
}

void LinearProgram::AddConstraint(LinearConstraint constraint) {
  constraints.push_back(std::move(constraint));
}

std::string LinearProgram::Dump() const {
  std::ostringstream out;
  out.precision(17);
  out << "maximize";
  for (int j = 0; j < num_vars; ++j)
    if (objective[j] != 0.0) out << " + " << objective[j] << " x" << j;
  out << "\nsubject to\n";
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    out << "  r" << i << ":";
    for (const auto& [j, coeff] : constraints[i].terms)
      out << " + " << coeff << " x" << j;
    switch (constraints[i].relation) {
      case Relation::kLe: out << " <= "; break;
      case Relation::kEq: out << " = "; break;
      case Relation::kGe: out << " >= "; break;
    }
    out << constraints[i].rhs << "\n";
  }
  out << "bounds\n";
  for (int j = 0; j < num_vars; ++j)
    out << "  " << lower[j] << " <= x" << j << " <= " << upper[j] << "\n";
  return out.str();
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration_limit";
  }
  return "unknown";
}

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kDegenerateStep = 1e-11;

enum VarState : unsigned char { kAtLower = 0, kAtUpper = 1, kBasic = 2 };

// Dense two-phase tableau. Variables are shifted so every lower bound is 0;
// `span` is the (possibly infinite) width of the box. Nonbasic variables sit
// at 0 or at their span; `beta` tracks the values of the basic ones.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, double tol) : lp_(lp), tol_(tol) { Build(); }

  SimplexResult Solve(long long max_iterations);

 private:
  void Build();
  bool RunPhase(long long max_iterations, SimplexResult* result);
  double& At(int row, int col) { return a_[static_cast<std::size_t>(row) * cols_ + col]; }

  int ChooseEntering(bool bland, int* direction) const;
  void ApplyBoundFlip(int entering, int direction);
  void Pivot(int entering, int row, int direction, double step, bool leaver_at_upper);

  const LinearProgram& lp_;
  double tol_;

  int rows_ = 0;
  int cols_ = 0;        // structural + slack + artificial
  int structural_ = 0;  // lp_.num_vars
  int first_artificial_ = 0;
  std::vector<double> a_;     // rows_ x cols_
  std::vector<double> beta_;  // basic values per row
  std::vector<int> basis_;    // variable basic in each row
  std::vector<unsigned char> state_;
  std::vector<double> span_;
  std::vector<double> d_;   // phase-2 reduced costs
  std::vector<double> d1_;  // phase-1 reduced costs
  double shift_objective_ = 0.0;
  long long iterations_ = 0;
};

void Tableau::Build() {
  structural_ = lp_.num_vars;
  rows_ = static_cast<int>(lp_.constraints.size());

  for (int j = 0; j < structural_; ++j) {
    if (!std::isfinite(lp_.lower[j]))
      Fail(ErrorCode::kInvalidArgument, "simplex needs finite lower bounds");
    if (lp_.upper[j] < lp_.lower[j])
      Fail(ErrorCode::kInvalidArgument, "variable has upper bound below lower bound");
  }

  // Shifted rhs and slack bookkeeping.
  std::vector<double> rhs(rows_);
  std::vector<int> slack_of_row(rows_, -1);
  int num_slacks = 0;
  for (int i = 0; i < rows_; ++i) {
    const LinearConstraint& c = lp_.constraints[i];
    double b = c.rhs;
    for (const auto& [j, coeff] : c.terms) {
      if (!std::isfinite(coeff)) Fail(ErrorCode::kInvalidArgument, "non-finite coefficient");
      b -= coeff * lp_.lower[j];
    }
    rhs[i] = b;
    if (c.relation != Relation::kEq) slack_of_row[i] = num_slacks++;
  }

  // Decide which rows keep their slack as the initial basic variable and
  // which need an artificial. Rows are sign-normalized so the initial basic
  // column is +1 and beta >= 0.
  std::vector<int> row_sign(rows_, 1);
  std::vector<bool> needs_artificial(rows_, false);
  int num_artificials = 0;
  for (int i = 0; i < rows_; ++i) {
    const Relation rel = lp_.constraints[i].relation;
    if (rel == Relation::kEq) {
      if (rhs[i] < 0) row_sign[i] = -1;
      needs_artificial[i] = true;
      ++num_artificials;
    } else if (rel == Relation::kLe) {
      if (rhs[i] >= 0) {
        row_sign[i] = 1;  // slack (+1) basic at rhs
      } else {
        row_sign[i] = -1;  // slack becomes -1, add artificial
        needs_artificial[i] = true;
        ++num_artificials;
      }
    } else {  // kGe
      if (rhs[i] <= 0) {
        row_sign[i] = -1;  // negated row turns the surplus into a +1 slack
      } else {
        row_sign[i] = 1;
        needs_artificial[i] = true;
        ++num_artificials;
      }
    }
  }

  first_artificial_ = structural_ + num_slacks;
  cols_ = first_artificial_ + num_artificials;
  a_.assign(static_cast<std::size_t>(rows_) * cols_, 0.0);
  beta_.assign(rows_, 0.0);
  basis_.assign(rows_, -1);
  state_.assign(cols_, kAtLower);
  span_.resize(cols_);
  for (int j = 0; j < structural_; ++j) span_[j] = lp_.upper[j] - lp_.lower[j];
  for (int j = structural_; j < cols_; ++j) span_[j] = kInfinity;

  int next_artificial = first_artificial_;
  for (int i = 0; i < rows_; ++i) {
    const LinearConstraint& c = lp_.constraints[i];
    const double sign = row_sign[i];
    for (const auto& [j, coeff] : c.terms) At(i, j) += sign * coeff;
    if (slack_of_row[i] >= 0) {
      const double slack_coeff = c.relation == Relation::kLe ? 1.0 : -1.0;
      At(i, structural_ + slack_of_row[i]) = sign * slack_coeff;
    }
    beta_[i] = sign * rhs[i];
    if (needs_artificial[i]) {
      const int art = next_artificial++;
      At(i, art) = 1.0;
      basis_[i] = art;
    } else {
      basis_[i] = structural_ + slack_of_row[i];
    }
    state_[basis_[i]] = kBasic;
  }

  // Phase-2 reduced costs start at the raw objective (initial basics cost 0).
  d_.assign(cols_, 0.0);
  shift_objective_ = 0.0;
  for (int j = 0; j < structural_; ++j) {
    d_[j] = lp_.objective[j];
    shift_objective_ += lp_.objective[j] * lp_.lower[j];
  }

  // Phase-1 reduced costs: maximize -sum(artificials).
  d1_.assign(cols_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    if (basis_[i] >= first_artificial_)
      for (int j = 0; j < cols_; ++j) d1_[j] += At(i, j);
  }
  for (int j = first_artificial_; j < cols_; ++j) d1_[j] = 0.0;
}

int Tableau::ChooseEntering(bool bland, int* direction) const {
  const std::vector<double>& d = d1_.empty() ? d_ : d1_;
  int best = -1;
  double best_score = tol_;
  for (int j = 0; j < cols_; ++j) {
    if (state_[j] == kBasic || span_[j] <= 0.0) continue;
    const double dj = d[j];
    double score;
    int dir;
    if (state_[j] == kAtLower && dj > tol_) {
      score = dj;
      dir = 1;
    } else if (state_[j] == kAtUpper && dj < -tol_) {
      score = -dj;
      dir = -1;
    } else {
      continue;
    }
    if (bland) {
      *direction = dir;
      return j;
    }
    if (score > best_score) {
      best_score = score;
      best = j;
      *direction = dir;
    }
  }
  return best;
}

void Tableau::ApplyBoundFlip(int entering, int direction) {
  const double delta = direction * span_[entering];
  for (int i = 0; i < rows_; ++i) beta_[i] -= delta * At(i, entering);
  state_[entering] = state_[entering] == kAtLower ? kAtUpper : kAtLower;
}

void Tableau::Pivot(int entering, int row, int direction, double step,
                    bool leaver_at_upper) {
  // New values of the basic variables, tracked directly.
  const double signed_step = direction * step;
  std::vector<double> column(rows_);
  for (int i = 0; i < rows_; ++i) column[i] = At(i, entering);
  for (int i = 0; i < rows_; ++i) beta_[i] -= signed_step * column[i];

  const int leaving = basis_[row];
  state_[leaving] = leaver_at_upper ? kAtUpper : kAtLower;
  if (leaving >= first_artificial_) span_[leaving] = 0.0;  // never re-enters
  basis_[row] = entering;
  state_[entering] = kBasic;
  beta_[row] = direction > 0 ? step : span_[entering] - step;

  // Row reduction.
  double* pivot_row = &a_[static_cast<std::size_t>(row) * cols_];
  const double pivot = pivot_row[entering];
  for (int j = 0; j < cols_; ++j) pivot_row[j] /= pivot;
  pivot_row[entering] = 1.0;
  for (int i = 0; i < rows_; ++i) {
    if (i == row) continue;
    double* target = &a_[static_cast<std::size_t>(i) * cols_];
    const double factor = target[entering];
    if (factor == 0.0) continue;
    for (int j = 0; j < cols_; ++j) target[j] -= factor * pivot_row[j];
    target[entering] = 0.0;
  }
  auto reduce_costs = [&](std::vector<double>& d) {
    const double factor = d[entering];
    if (factor == 0.0) return;
    for (int j = 0; j < cols_; ++j) d[j] -= factor * pivot_row[j];
    d[entering] = 0.0;
  };
  reduce_costs(d_);
  if (!d1_.empty()) reduce_costs(d1_);
}

bool Tableau::RunPhase(long long max_iterations, SimplexResult* result) {
  bool bland = false;
  int degenerate_run = 0;
  const int bland_threshold = 2 * rows_ + 100;

  while (true) {
    if (iterations_ >= max_iterations) {
      result->status = LpStatus::kIterationLimit;
      return false;
    }
    int direction = 0;
    const int entering = ChooseEntering(bland, &direction);
    if (entering < 0) return true;  // no improving column: phase optimal
    ++iterations_;

    // Ratio test: how far the entering variable can move.
    double limit = span_[entering];
    int blocking_row = -1;
    bool leaver_at_upper = false;
    double best_pivot_mag = 0.0;
    for (int i = 0; i < rows_; ++i) {
      const double rate = direction * At(i, entering);
      double candidate;
      bool at_upper;
      if (rate > kPivotTol) {
        candidate = std::max(beta_[i], 0.0) / rate;  // basic variable drops to 0
        at_upper = false;
      } else if (rate < -kPivotTol && std::isfinite(span_[basis_[i]])) {
        candidate = (beta_[i] - span_[basis_[i]]) / rate;  // climbs to its span
        candidate = std::max(candidate, 0.0);
        at_upper = true;
      } else {
        continue;
      }
      const double mag = std::fabs(At(i, entering));
      bool take;
      if (candidate < limit - 1e-12) {
        take = true;
      } else if (candidate < limit + 1e-12 && blocking_row >= 0) {
        // Tie: prefer the numerically larger pivot, or the smallest basis
        // index under Bland's rule.
        take = bland ? basis_[i] < basis_[blocking_row] : mag > best_pivot_mag;
      } else {
        take = false;
      }
      if (take) {
        limit = candidate;
        blocking_row = i;
        leaver_at_upper = at_upper;
        best_pivot_mag = mag;
      }
    }

    if (blocking_row < 0) {
      if (!std::isfinite(limit)) {
        result->status = LpStatus::kUnbounded;
        return false;
      }
      ApplyBoundFlip(entering, direction);
      degenerate_run = 0;
      bland = false;
      continue;
    }

    if (limit <= kDegenerateStep) {
      if (++degenerate_run > bland_threshold) bland = true;
    } else {
      degenerate_run = 0;
      bland = false;
    }
    Pivot(entering, blocking_row, direction, limit, leaver_at_upper);
  }
}

SimplexResult Tableau::Solve(long long max_iterations) {
  SimplexResult result;

  // Phase 1: drive the artificials to zero.
  if (cols_ > first_artificial_) {
    if (!RunPhase(max_iterations, &result)) {
      result.iterations = static_cast<int>(iterations_);
      return result;
    }
    double infeasibility = 0.0;
    for (int i = 0; i < rows_; ++i)
      if (basis_[i] >= first_artificial_) infeasibility += std::max(beta_[i], 0.0);
    if (infeasibility > std::max(tol_, 1e-7)) {
      result.status = LpStatus::kInfeasible;
      result.iterations = static_cast<int>(iterations_);
      return result;
    }
    // Pivot zero-valued artificials out where possible; rows that cannot be
    // pivoted are redundant and keep a fixed artificial at value 0.
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (int j = 0; j < first_artificial_; ++j) {
        if (state_[j] != kBasic && span_[j] > 0.0 && std::fabs(At(i, j)) > kPivotTol) {
          Pivot(j, i, 1, 0.0, false);
          break;
        }
      }
    }
    for (int j = first_artificial_; j < cols_; ++j) span_[j] = 0.0;
  }
  d1_.clear();

  if (!RunPhase(max_iterations, &result)) {
    result.iterations = static_cast<int>(iterations_);
    return result;
  }

  // Recover the solution in original coordinates.
  std::vector<double> value(cols_, 0.0);
  for (int j = 0; j < cols_; ++j)
    if (state_[j] == kAtUpper) value[j] = span_[j];
  for (int i = 0; i < rows_; ++i) value[basis_[i]] = beta_[i];
  result.x.assign(structural_, 0.0);
  double objective = 0.0;
  for (int j = 0; j < structural_; ++j) {
    result.x[j] = lp_.lower[j] + value[j];
    objective += lp_.objective[j] * result.x[j];
  }
  result.objective = objective;

  // Certificate: primal residuals from the original data, plus the largest
  // improving reduced cost left over.
  double primal = 0.0;
  for (int j = 0; j < structural_; ++j) {
    primal = std::max(primal, lp_.lower[j] - result.x[j]);
    if (std::isfinite(lp_.upper[j])) primal = std::max(primal, result.x[j] - lp_.upper[j]);
  }
  for (const LinearConstraint& c : lp_.constraints) {
    double activity = 0.0;
    for (const auto& [j, coeff] : c.terms) activity += coeff * result.x[j];
    switch (c.relation) {
      case Relation::kLe: primal = std::max(primal, activity - c.rhs); break;
      case Relation::kGe: primal = std::max(primal, c.rhs - activity); break;
      case Relation::kEq: primal = std::max(primal, std::fabs(activity - c.rhs)); break;
    }
  }
  double dual = 0.0;
  for (int j = 0; j < cols_; ++j) {
    if (state_[j] == kBasic || span_[j] <= 0.0) continue;
    if (state_[j] == kAtLower) dual = std::max(dual, d_[j]);
    if (state_[j] == kAtUpper) dual = std::max(dual, -d_[j]);
  }
  result.max_primal_violation = primal;
  result.max_dual_violation = dual;
  result.status = LpStatus::kOptimal;
  result.iterations = static_cast<int>(iterations_);
  return result;
}

}  // namespace

SimplexResult SolveSimplex(const LinearProgram& lp, double tolerance,
                           long long max_iterations) {
  if (lp.num_vars == 0) Fail(ErrorCode::kInvalidArgument, "LP has no variables");
  if (max_iterations < 0)
    max_iterations =
        std::max<long long>(20000, 400LL * static_cast<long long>(lp.constraints.size()));
  Tableau tableau(lp, tolerance);
  return tableau.Solve(max_iterations);
}

}  // namespace fairconf
