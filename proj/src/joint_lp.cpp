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

#include "joint_lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"
#include "metrics.hpp"

namespace fairconf {

void ValidateObjective(const JointObjective& objective) {
  if (objective.w_eff < 0.0 || objective.lambda1 < 0.0 || objective.lambda2 < 0.0)
    Fail(ErrorCode::kInvalidArgument, "objective weights must be non-negative");
  if (objective.w_eff == 0.0 && objective.lambda1 == 0.0 && objective.lambda2 == 0.0)
    Fail(ErrorCode::kInvalidArgument, "objective weights must not all be zero");
}

Matrix CrowdMatrix(const SchedulingInstance& instance) {
  const std::size_t m = instance.num_participants();
  const std::size_t n = instance.num_talks();
  const std::size_t l = instance.num_slots();
  Matrix crowd(n, l);
  for (std::size_t p = 0; p < m; ++p) {
    const double w = instance.weight(p);
    auto interest = instance.interest.row(p);
    auto availability = instance.availability.row(p);
    for (std::size_t t = 0; t < n; ++t) {
      const double wv = w * interest[t];
      if (wv == 0.0) continue;
      for (std::size_t s = 0; s < l; ++s) crowd(t, s) += wv * availability[s];
    }
  }
  return crowd;
}

JointLp BuildJointLpView(const SchedulingInstance& instance,
                         const JointObjective& objective, const Matrix& crowd,
                         std::vector<int> view_talks, std::vector<int> view_slots,
                         const std::vector<double>& icg_full,
                         const std::vector<double>& iec_view,
                         const JointLpViewOptions& options) {
  ValidateObjective(objective);
  const std::size_t m = instance.num_participants();
  const std::size_t nt = view_talks.size();
  const std::size_t ns = view_slots.size();
  if (nt == 0 || ns == 0 || nt > ns)
    Fail(ErrorCode::kInvalidDims, "LP view needs 1 <= talks <= slots");
  if (icg_full.size() != m || iec_view.size() != nt)
    Fail(ErrorCode::kDimensionMismatch, "normalizer vectors do not match the view");
  for (double value : icg_full)
    if (!(value >= 0.0) || !std::isfinite(value))
      Fail(ErrorCode::kDegenerateNormalization, "ICG normalizers must be finite and >= 0");
  for (double value : iec_view)
    if (!(value >= 0.0) || !std::isfinite(value))
      Fail(ErrorCode::kDegenerateNormalization, "IEC normalizers must be finite and >= 0");

  JointLp joint;
  joint.objective = objective;
  joint.talks = std::move(view_talks);
  joint.slots = std::move(view_slots);
  joint.icg = icg_full;
  joint.iec = iec_view;
  joint.participant_in_scope.assign(m, false);
  joint.talk_in_scope.assign(nt, false);
  for (std::size_t p = 0; p < m; ++p) joint.participant_in_scope[p] = icg_full[p] > 0.0;
  for (std::size_t i = 0; i < nt; ++i) joint.talk_in_scope[i] = iec_view[i] > 0.0;
  const bool any_participant = std::any_of(joint.participant_in_scope.begin(),
                                           joint.participant_in_scope.end(),
                                           [](bool b) { return b; });
  const bool any_talk = std::any_of(joint.talk_in_scope.begin(), joint.talk_in_scope.end(),
                                    [](bool b) { return b; });

  LinearProgram& lp = joint.lp;
  const double total_weight = instance.total_weight();
  const double efficiency_scale =
      options.efficiency_scale > 0.0
          ? options.efficiency_scale
          : objective.w_eff / (total_weight * static_cast<double>(nt));
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t j = 0; j < ns; ++j)
      lp.AddVariable(0.0, 1.0,
                     efficiency_scale * crowd(joint.talks[i], joint.slots[j]));
  // A fairness group with no in-scope row would leave its aux variables
  // unconstrained; zero their weight in that case.
  const double l1 = any_participant ? objective.lambda1 : 0.0;
  const double l2 = any_talk ? objective.lambda2 : 0.0;
  joint.u_lo = lp.AddVariable(0.0, 1.0, l1);
  joint.u_hi = lp.AddVariable(0.0, 1.0, -l1);
  joint.v_lo = lp.AddVariable(0.0, 1.0, l2);
  joint.v_hi = lp.AddVariable(0.0, 1.0, -l2);

  // Each talk exactly once.
  for (std::size_t i = 0; i < nt; ++i) {
    LinearConstraint row;
    for (std::size_t j = 0; j < ns; ++j) row.terms.emplace_back(joint.XVar(i, j), 1.0);
    row.relation = Relation::kEq;
    row.rhs = 1.0;
    lp.AddConstraint(std::move(row));
  }
  // Each slot at most once.
  for (std::size_t j = 0; j < ns; ++j) {
    LinearConstraint col;
    for (std::size_t i = 0; i < nt; ++i) col.terms.emplace_back(joint.XVar(i, j), 1.0);
    col.relation = Relation::kLe;
    col.rhs = 1.0;
    lp.AddConstraint(std::move(col));
  }
  // u_lo <= fractional NCG_p <= u_hi for every in-scope participant. Any
  // committed gain from earlier rounding rounds is a constant in the NCG, so
  // it moves to the right-hand side.
  for (std::size_t p = 0; p < m; ++p) {
    if (!joint.participant_in_scope[p]) continue;
    std::vector<std::pair<int, double>> gain_terms;
    auto interest = instance.interest.row(p);
    auto availability = instance.availability.row(p);
    for (std::size_t i = 0; i < nt; ++i) {
      const double v = interest[joint.talks[i]];
      if (v == 0.0) continue;
      for (std::size_t j = 0; j < ns; ++j) {
        const double coeff = v * availability[joint.slots[j]] / joint.icg[p];
        if (coeff != 0.0) gain_terms.emplace_back(joint.XVar(i, j), coeff);
      }
    }
    const double committed =
        options.committed_gains ? (*options.committed_gains)[p] / joint.icg[p] : 0.0;
    LinearConstraint lo;
    lo.terms = gain_terms;
    lo.terms.emplace_back(joint.u_lo, -1.0);
    lo.relation = Relation::kGe;
    lo.rhs = -committed;
    lp.AddConstraint(std::move(lo));
    LinearConstraint hi;
    hi.terms = std::move(gain_terms);
    hi.terms.emplace_back(joint.u_hi, -1.0);
    hi.relation = Relation::kLe;
    hi.rhs = -committed;
    lp.AddConstraint(std::move(hi));
  }
  // v_lo <= fractional NEC_t <= v_hi for every in-scope talk.
  for (std::size_t i = 0; i < nt; ++i) {
    if (!joint.talk_in_scope[i]) continue;
    std::vector<std::pair<int, double>> crowd_terms;
    for (std::size_t j = 0; j < ns; ++j) {
      const double coeff = crowd(joint.talks[i], joint.slots[j]) / joint.iec[i];
      if (coeff != 0.0) crowd_terms.emplace_back(joint.XVar(i, j), coeff);
    }
    LinearConstraint lo;
    lo.terms = crowd_terms;
    lo.terms.emplace_back(joint.v_lo, -1.0);
    lo.relation = Relation::kGe;
    lo.rhs = 0.0;
    lp.AddConstraint(std::move(lo));
    LinearConstraint hi;
    hi.terms = std::move(crowd_terms);
    hi.terms.emplace_back(joint.v_hi, -1.0);
    hi.relation = Relation::kLe;
    hi.rhs = 0.0;
    lp.AddConstraint(std::move(hi));
  }
  return joint;
}

JointLp BuildJointLp(const SchedulingInstance& instance, const JointObjective& objective) {
  const Matrix crowd = CrowdMatrix(instance);
  std::vector<int> talks(instance.num_talks());
  std::vector<int> slots(instance.num_slots());
  std::iota(talks.begin(), talks.end(), 0);
  std::iota(slots.begin(), slots.end(), 0);
  std::vector<double> iec(instance.num_talks());
  for (std::size_t t = 0; t < iec.size(); ++t) {
    double best = 0.0;
    for (std::size_t s = 0; s < instance.num_slots(); ++s)
      best = std::max(best, crowd(t, s));
    iec[t] = best;
  }
  return BuildJointLpView(instance, objective, crowd, std::move(talks), std::move(slots),
                          AllIdealCumulativeGains(instance), iec);
}

namespace {

// Rows tied to a zero-weight fairness group never bind the optimum; pruning
// them keeps the tableau small (the participant block dominates otherwise).
LinearProgram PruneZeroWeightFairnessRows(const JointLp& joint) {
  const bool keep_participants = joint.objective.lambda1 > 0.0;
  const bool keep_talks = joint.objective.lambda2 > 0.0;
  if (keep_participants && keep_talks) return joint.lp;

  const std::size_t base = joint.talks.size() + joint.slots.size();
  std::size_t participant_rows = 0;
  for (bool in_scope : joint.participant_in_scope)
    if (in_scope) participant_rows += 2;

  LinearProgram pruned;
  pruned.num_vars = joint.lp.num_vars;
  pruned.objective = joint.lp.objective;
  pruned.lower = joint.lp.lower;
  pruned.upper = joint.lp.upper;
  for (std::size_t r = 0; r < joint.lp.constraints.size(); ++r) {
    const bool is_participant_row = r >= base && r < base + participant_rows;
    const bool is_talk_row = r >= base + participant_rows;
    if (is_participant_row && !keep_participants) continue;
    if (is_talk_row && !keep_talks) continue;
    pruned.constraints.push_back(joint.lp.constraints[r]);
  }
  return pruned;
}

}  // namespace

LpSolution SolveJointLp(const JointLp& joint, double tolerance) {
  const LinearProgram pruned = PruneZeroWeightFairnessRows(joint);
  SimplexResult sim = SolveSimplex(pruned, tolerance);
  if (sim.status == LpStatus::kInfeasible)
    Fail(ErrorCode::kInfeasible, "joint LP reported infeasible; this is an internal bug");
  if (sim.status != LpStatus::kOptimal)
    Fail(ErrorCode::kNumericalFailure,
         std::string("LP solve failed: ") + LpStatusName(sim.status));

  const std::size_t nt = joint.talks.size();
  const std::size_t ns = joint.slots.size();
  LpSolution solution;
  solution.status = sim.status;
  solution.iterations = sim.iterations;
  solution.objective = sim.objective;
  solution.max_primal_violation = sim.max_primal_violation;
  solution.max_dual_violation = sim.max_dual_violation;
  solution.x = Matrix(nt, ns);
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < ns; ++j) {
      double value = sim.x[joint.XVar(i, j)];
      if (value < 0.0) {
        if (value < -1e-9)
          Fail(ErrorCode::kNumericalFailure, "LP produced a clearly negative entry");
        value = 0.0;
      }
      solution.x(i, j) = value;
    }
  }

  // Feasibility contract on the returned fractional schedule.
  for (std::size_t i = 0; i < nt; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < ns; ++j) row_sum += solution.x(i, j);
    if (std::fabs(row_sum - 1.0) > 1e-6)
      Fail(ErrorCode::kNumericalFailure, "LP row sum drifted from 1");
  }
  for (std::size_t j = 0; j < ns; ++j) {
    double col_sum = 0.0;
    for (std::size_t i = 0; i < nt; ++i) col_sum += solution.x(i, j);
    if (col_sum > 1.0 + 1e-6)
      Fail(ErrorCode::kNumericalFailure, "LP column sum drifted above 1");
  }

  // Aux variables are meaningful only when their group carries weight; a
  // pruned group reports 0.
  if (joint.objective.lambda1 > 0.0) {
    solution.u_lo = sim.x[joint.u_lo];
    solution.u_hi = sim.x[joint.u_hi];
  }
  if (joint.objective.lambda2 > 0.0) {
    solution.v_lo = sim.x[joint.v_lo];
    solution.v_hi = sim.x[joint.v_hi];
  }
  return solution;
}

}  // namespace fairconf
