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

#ifndef FAIRCONF_JOINT_LP_HPP_
#define FAIRCONF_JOINT_LP_HPP_

#include <vector>

#include "lp.hpp"
#include "matrix.hpp"
#include "model.hpp"

namespace fairconf {

// Scalarization weights: efficiency, participant fairness, speaker fairness.
struct JointObjective {
  double w_eff = 1.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

// Throws InvalidArgument unless all weights are non-negative and one is
// positive.
void ValidateObjective(const JointObjective& objective);

// Weighted crowd of every (talk, slot) pair: ec(t,s) = sum_p w_p V_p(t) A_p(s).
Matrix CrowdMatrix(const SchedulingInstance& instance);

// The relaxed joint optimization over a (talk, slot) view of an instance.
// Variables are the fractional assignment X (row-major over the view) plus
// the four max/min linearization variables. Participants or talks whose
// normalizer is zero are out of scope: their fairness rows are dropped and
// flagged.
struct JointLp {
  LinearProgram lp;
  std::vector<int> talks;  // view -> instance talk index
  std::vector<int> slots;  // view -> instance slot index
  int u_lo = -1, u_hi = -1, v_lo = -1, v_hi = -1;
  std::vector<double> icg;  // per participant, full instance
  std::vector<double> iec;  // per view talk
  std::vector<bool> participant_in_scope;
  std::vector<bool> talk_in_scope;
  JointObjective objective;

  int XVar(std::size_t view_t, std::size_t view_s) const {
    return static_cast<int>(view_t * slots.size() + view_s);
  }
};

// Full instance: X is n-by-l, normalizers computed from the instance itself.
JointLp BuildJointLp(const SchedulingInstance& instance, const JointObjective& objective);

struct JointLpViewOptions {
  // Gains already locked in by earlier rounding commitments, per participant.
  // They enter the participant-fairness rows as constants, so the residual
  // LP balances total satisfaction rather than leftover crumbs.
  const std::vector<double>* committed_gains = nullptr;
  // Efficiency term scale; <= 0 derives w_eff / (W * |view talks|).
  double efficiency_scale = 0.0;
};

// Restricted view with caller-supplied normalizers, used by the repeated
// rounding loop: ICG stays global while IEC reflects the remaining slots.
// `crowd` must be the full CrowdMatrix of `instance`.
JointLp BuildJointLpView(const SchedulingInstance& instance,
                         const JointObjective& objective, const Matrix& crowd,
                         std::vector<int> view_talks, std::vector<int> view_slots,
                         const std::vector<double>& icg_full,
                         const std::vector<double>& iec_view,
                         const JointLpViewOptions& options = {});

struct LpSolution {
  Matrix x;  // |view talks| x |view slots|, clamped to be non-negative
  double u_lo = 0.0, u_hi = 0.0, v_lo = 0.0, v_hi = 0.0;
  double objective = 0.0;
  LpStatus status = LpStatus::kOptimal;
  int iterations = 0;
  double max_primal_violation = 0.0;
  double max_dual_violation = 0.0;
};

// Solves to optimality (zero reduced costs within `tolerance`). Fairness rows
// whose lambda weight is zero cannot affect the optimum, so they are pruned
// before the solve; the reported u/v values are then read off the fractional
// X directly. Throws Infeasible or NumericalFailure on solver breakdown
// (neither can occur for a validated instance).
LpSolution SolveJointLp(const JointLp& joint, double tolerance = 1e-8);

}  // namespace fairconf

#endif  // FAIRCONF_JOINT_LP_HPP_
