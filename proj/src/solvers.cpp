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

#include "solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "errors.hpp"
#include "hungarian.hpp"
#include "metrics.hpp"

namespace fairconf {

namespace {

// (min - max) over the in-scope entries; 0 when nothing is in scope.
double SpreadTerm(const std::vector<double>& values, const std::vector<double>& normalizers) {
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (normalizers[i] <= 0.0) continue;
    const double normalized = values[i] / normalizers[i];
    if (!any) {
      lo = hi = normalized;
      any = true;
    } else {
      lo = std::min(lo, normalized);
      hi = std::max(hi, normalized);
    }
  }
  return lo - hi;
}

}  // namespace

double ScalarizedObjective(const SchedulingInstance& instance, const Schedule& schedule,
                           const JointObjective& objective) {
  ValidateObjective(objective);
  ValidateFullSchedule(instance, schedule);
  const std::size_t m = instance.num_participants();
  const std::size_t n = instance.num_talks();
  const Matrix crowd = CrowdMatrix(instance);

  double tep = 0.0;
  std::vector<double> crowd_at(n, 0.0);
  for (const auto& [t, s] : schedule.assignment) {
    crowd_at[t] = crowd(t, s);
    tep += crowd_at[t];
  }
  double value = objective.w_eff * tep / (instance.total_weight() * static_cast<double>(n));

  if (objective.lambda1 > 0.0) {
    std::vector<double> gains(m, 0.0);
    for (std::size_t p = 0; p < m; ++p)
      for (const auto& [t, s] : schedule.assignment)
        gains[p] += instance.interest(p, t) * instance.availability(p, s);
    value += objective.lambda1 * SpreadTerm(gains, AllIdealCumulativeGains(instance));
  }
  if (objective.lambda2 > 0.0)
    value += objective.lambda2 * SpreadTerm(crowd_at, AllIdealExpectedCrowds(instance));
  return value;
}

SolveResult SolveEm(const SchedulingInstance& instance) {
  ValidateInstance(instance);
  const std::size_t n = instance.num_talks();
  const std::size_t l = instance.num_slots();
  const Matrix crowd = CrowdMatrix(instance);
  const double total_weight = instance.total_weight();

  // l x l min-cost matching; rows beyond the real talks are dummies with a
  // constant cost, so they never influence which real assignment wins.
  Matrix cost(l, l, total_weight);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < l; ++s) cost(t, s) = total_weight - crowd(t, s);
  const std::vector<int> match = HungarianMinCost(cost);

  SolveResult result;
  result.method = "em";
  result.objective_spec = {1.0, 0.0, 0.0};
  for (std::size_t t = 0; t < n; ++t) {
    result.schedule.assignment.emplace_back(static_cast<int>(t), match[t]);
    result.tep += crowd(t, match[t]);
  }
  result.objective = result.tep / (total_weight * static_cast<double>(n));
  return result;
}

SolveResult SolveIam(const SchedulingInstance& instance) {
  ValidateInstance(instance);
  const std::size_t m = instance.num_participants();
  const std::size_t n = instance.num_talks();
  const std::size_t l = instance.num_slots();

  std::vector<double> interest_score(n, 0.0), availability_score(l, 0.0);
  for (std::size_t p = 0; p < m; ++p) {
    const double w = instance.weight(p);
    for (std::size_t t = 0; t < n; ++t) interest_score[t] += w * instance.interest(p, t);
    for (std::size_t s = 0; s < l; ++s)
      availability_score[s] += w * instance.availability(p, s);
  }
  std::vector<int> talk_order(n), slot_order(l);
  std::iota(talk_order.begin(), talk_order.end(), 0);
  std::iota(slot_order.begin(), slot_order.end(), 0);
  std::stable_sort(talk_order.begin(), talk_order.end(), [&](int a, int b) {
    return interest_score[a] > interest_score[b];
  });
  std::stable_sort(slot_order.begin(), slot_order.end(), [&](int a, int b) {
    return availability_score[a] > availability_score[b];
  });

  SolveResult result;
  result.method = "iam";
  result.objective_spec = {1.0, 0.0, 0.0};
  const Matrix crowd = CrowdMatrix(instance);
  for (std::size_t k = 0; k < n; ++k) {
    result.schedule.assignment.emplace_back(talk_order[k], slot_order[k]);
    result.tep += crowd(talk_order[k], slot_order[k]);
  }
  std::sort(result.schedule.assignment.begin(), result.schedule.assignment.end());
  result.objective = result.tep / (instance.total_weight() * static_cast<double>(n));
  return result;
}

namespace {

// Depth-first enumeration over injective assignments in lexicographic order.
// State updates are incremental; NCG bookkeeping is skipped entirely when
// lambda1 is zero, and likewise for NEC.
class ExactSearch {
 public:
  ExactSearch(const SchedulingInstance& instance, const JointObjective& objective)
      : instance_(instance),
        objective_(objective),
        m_(instance.num_participants()),
        n_(instance.num_talks()),
        l_(instance.num_slots()),
        crowd_(CrowdMatrix(instance)),
        icg_(AllIdealCumulativeGains(instance)),
        iec_(AllIdealExpectedCrowds(instance)),
        efficiency_scale_(objective.w_eff /
                          (instance.total_weight() * static_cast<double>(n_))),
        gains_(m_, 0.0),
        chosen_(n_, -1),
        used_(l_, false),
        best_assignment_(n_, -1) {
    track_gains_ = objective_.lambda1 > 0.0;
    track_crowd_ = objective_.lambda2 > 0.0;
    if (track_gains_) {
      // gain_[p](t, s) = V_p(t) A_p(s), precomputed for the hot loop.
      gain_.reserve(m_);
      for (std::size_t p = 0; p < m_; ++p) {
        Matrix table(n_, l_);
        for (std::size_t t = 0; t < n_; ++t)
          for (std::size_t s = 0; s < l_; ++s)
            table(t, s) = instance_.interest(p, t) * instance_.availability(p, s);
        gain_.push_back(std::move(table));
      }
    }
  }

  void Run() { Descend(0, 0.0); }

  long long leaves() const { return leaves_; }
  const std::vector<int>& best_assignment() const { return best_assignment_; }
  double best_objective() const { return best_objective_; }

 private:
  void Descend(std::size_t t, double tep) {
    if (t == n_) {
      ++leaves_;
      const double value = Evaluate(tep);
      if (value > best_objective_) {
        best_objective_ = value;
        best_assignment_ = chosen_;
      }
      return;
    }
    for (std::size_t s = 0; s < l_; ++s) {
      if (used_[s]) continue;
      used_[s] = true;
      chosen_[t] = static_cast<int>(s);
      if (track_gains_)
        for (std::size_t p = 0; p < m_; ++p) gains_[p] += gain_[p](t, s);
      Descend(t + 1, tep + crowd_(t, s));
      if (track_gains_)
        for (std::size_t p = 0; p < m_; ++p) gains_[p] -= gain_[p](t, s);
      chosen_[t] = -1;
      used_[s] = false;
    }
  }

  double Evaluate(double tep) const {
    double value = efficiency_scale_ * tep;
    if (track_gains_) {
      double lo = 0.0, hi = 0.0;
      bool any = false;
      for (std::size_t p = 0; p < m_; ++p) {
        if (icg_[p] <= 0.0) continue;
        const double ncg = gains_[p] / icg_[p];
        if (!any) {
          lo = hi = ncg;
          any = true;
        } else {
          lo = std::min(lo, ncg);
          hi = std::max(hi, ncg);
        }
      }
      value += objective_.lambda1 * (lo - hi);
    }
    if (track_crowd_) {
      double lo = 0.0, hi = 0.0;
      bool any = false;
      for (std::size_t t = 0; t < n_; ++t) {
        if (iec_[t] <= 0.0) continue;
        const double nec = crowd_(t, chosen_[t]) / iec_[t];
        if (!any) {
          lo = hi = nec;
          any = true;
        } else {
          lo = std::min(lo, nec);
          hi = std::max(hi, nec);
        }
      }
      value += objective_.lambda2 * (lo - hi);
    }
    return value;
  }

  const SchedulingInstance& instance_;
  JointObjective objective_;
  std::size_t m_, n_, l_;
  Matrix crowd_;
  std::vector<double> icg_, iec_;
  double efficiency_scale_;
  bool track_gains_ = false;
  bool track_crowd_ = false;
  std::vector<Matrix> gain_;  // per participant, when lambda1 > 0

  std::vector<double> gains_;
  std::vector<int> chosen_;
  std::vector<bool> used_;
  long long leaves_ = 0;
  double best_objective_ = -std::numeric_limits<double>::infinity();
  std::vector<int> best_assignment_;
};

}  // namespace

SolveResult SolveExact(const SchedulingInstance& instance, const JointObjective& objective,
                       long long budget) {
  ValidateInstance(instance);
  ValidateObjective(objective);
  const std::size_t n = instance.num_talks();
  const std::size_t l = instance.num_slots();

  long long required = 1;
  for (std::size_t i = 0; i < n; ++i) {
    required *= static_cast<long long>(l - i);
    if (required > budget || required < 0) {
      std::ostringstream msg;
      msg << "exact enumeration needs l!/(l-n)! = ";
      double exact_count = 1.0;
      for (std::size_t k = 0; k < n; ++k) exact_count *= static_cast<double>(l - k);
      msg << exact_count << " schedules, over the budget of " << budget;
      Fail(ErrorCode::kBudgetExceeded, msg.str());
    }
  }

  ExactSearch search(instance, objective);
  search.Run();

  SolveResult result;
  result.method = "exact";
  result.objective_spec = objective;
  result.enumeration_count = search.leaves();
  for (std::size_t t = 0; t < n; ++t)
    result.schedule.assignment.emplace_back(static_cast<int>(t),
                                            search.best_assignment()[t]);
  result.objective = search.best_objective();
  result.tep = Tep(instance, MultiRoundSchedule::single(result.schedule));
  return result;
}

namespace {

// Scalarized value of a (possibly partial) assignment over a view, with the
// view-level normalizers the rounding loop optimizes against.
double ViewObjective(const SchedulingInstance& instance, const Matrix& crowd,
                     const std::vector<double>& icg_full,
                     const std::vector<double>& iec_of_talk, double efficiency_scale,
                     const JointObjective& objective,
                     const std::vector<std::pair<int, int>>& assignment) {
  double crowd_sum = 0.0;
  for (const auto& [t, s] : assignment) crowd_sum += crowd(t, s);
  double value = efficiency_scale * crowd_sum;

  if (objective.lambda1 > 0.0) {
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (std::size_t p = 0; p < instance.num_participants(); ++p) {
      if (icg_full[p] <= 0.0) continue;
      double gain = 0.0;
      for (const auto& [t, s] : assignment)
        gain += instance.interest(p, t) * instance.availability(p, s);
      const double ncg = gain / icg_full[p];
      if (!any) {
        lo = hi = ncg;
        any = true;
      } else {
        lo = std::min(lo, ncg);
        hi = std::max(hi, ncg);
      }
    }
    value += objective.lambda1 * (lo - hi);
  }
  if (objective.lambda2 > 0.0) {
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (const auto& [t, s] : assignment) {
      const double iec = iec_of_talk[t];
      if (iec <= 0.0) continue;
      const double nec = crowd(t, s) / iec;
      if (!any) {
        lo = hi = nec;
        any = true;
      } else {
        lo = std::min(lo, nec);
        hi = std::max(hi, nec);
      }
    }
    value += objective.lambda2 * (lo - hi);
  }
  return value;
}

// Greedy cleanup on the rounded schedule: single-talk moves to free slots and
// pairwise slot swaps, first improvement, until a full sweep finds nothing.
// Rounding a fractional optimum can hide a large fairness gap the relaxation
// promised away; this pass claws most of it back and never makes the
// schedule worse.
void ImproveLocally(const SchedulingInstance& instance, const Matrix& crowd,
                    const std::vector<double>& icg_full,
                    const std::vector<double>& iec_of_talk, double efficiency_scale,
                    const JointObjective& objective, const std::vector<int>& view_slots,
                    std::vector<std::pair<int, int>>* assignment) {
  constexpr int kMaxSweeps = 100;
  constexpr double kMinGain = 1e-12;
  auto value = [&](const std::vector<std::pair<int, int>>& candidate) {
    return ViewObjective(instance, crowd, icg_full, iec_of_talk, efficiency_scale,
                         objective, candidate);
  };
  double current = value(*assignment);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool improved = false;
    std::vector<bool> used(instance.num_slots(), false);
    for (const auto& [t, s] : *assignment) used[s] = true;

    for (std::size_t a = 0; a < assignment->size(); ++a) {
      for (int slot : view_slots) {
        if (used[slot]) continue;
        const int old_slot = (*assignment)[a].second;
        (*assignment)[a].second = slot;
        const double candidate = value(*assignment);
        if (candidate > current + kMinGain) {
          current = candidate;
          used[old_slot] = false;
          used[slot] = true;
          improved = true;
        } else {
          (*assignment)[a].second = old_slot;
        }
      }
    }
    for (std::size_t a = 0; a + 1 < assignment->size(); ++a) {
      for (std::size_t b = a + 1; b < assignment->size(); ++b) {
        std::swap((*assignment)[a].second, (*assignment)[b].second);
        const double candidate = value(*assignment);
        if (candidate > current + kMinGain) {
          current = candidate;
          improved = true;
        } else {
          std::swap((*assignment)[a].second, (*assignment)[b].second);
        }
      }
    }
    if (!improved) break;
  }
}

}  // namespace

Schedule SolveRrfsOnView(const SchedulingInstance& instance,
                         const JointObjective& objective, const Matrix& crowd,
                         const std::vector<double>& icg_full, std::vector<int> talks,
                         std::vector<int> slots, double tolerance, SolveResult* diag) {
  constexpr double kZeroEntry = 1e-9;
  constexpr double kTieWindow = 1e-12;
  // Entries this close to 1 were committed by the LP itself and can be fixed
  // without information loss; everything else deserves a residual re-solve.
  constexpr double kIntegralEntry = 1.0 - 1e-6;

  Schedule out;
  std::vector<int> active_talks = std::move(talks);
  std::vector<int> active_slots = std::move(slots);
  const std::vector<int> view_slots = active_slots;
  const std::size_t m = instance.num_participants();
  std::vector<double> committed_gains(m, 0.0);

  // View-level speaker normalizers, fixed once for the cleanup objective.
  std::vector<double> iec_of_talk(instance.num_talks(), 0.0);
  for (int t : active_talks)
    for (int s : active_slots)
      iec_of_talk[t] = std::max(iec_of_talk[t], crowd(t, s));

  // The efficiency term keeps the scale of the initial view across residual
  // re-solves, so the efficiency/fairness balance does not drift.
  JointLpViewOptions options;
  options.efficiency_scale =
      objective.w_eff /
      (instance.total_weight() * static_cast<double>(active_talks.size()));
  options.committed_gains = &committed_gains;

  auto commit = [&](int talk, int slot) {
    out.assignment.emplace_back(talk, slot);
    for (std::size_t p = 0; p < m; ++p)
      committed_gains[p] += instance.interest(p, talk) * instance.availability(p, slot);
  };

  while (!active_talks.empty()) {
    if (diag) ++diag->outer_iterations;
    // Residual speaker normalizers: best crowd over the remaining slots.
    std::vector<double> iec_view(active_talks.size(), 0.0);
    for (std::size_t i = 0; i < active_talks.size(); ++i)
      for (int s : active_slots)
        iec_view[i] = std::max(iec_view[i], crowd(active_talks[i], s));

    JointLp joint = BuildJointLpView(instance, objective, crowd, active_talks,
                                     active_slots, icg_full, iec_view, options);
    LpSolution solution = SolveJointLp(joint, tolerance);
    if (diag) diag->lp_iterations += solution.iterations;

    Matrix x = solution.x;
    std::vector<bool> talk_done(active_talks.size(), false);
    std::vector<bool> slot_done(active_slots.size(), false);
    bool forced = false;
    while (true) {
      double best = 0.0;
      int bi = -1, bj = -1;
      for (std::size_t i = 0; i < active_talks.size(); ++i) {
        if (talk_done[i]) continue;
        for (std::size_t j = 0; j < active_slots.size(); ++j) {
          if (slot_done[j]) continue;
          if (x(i, j) > best + kTieWindow) {
            best = x(i, j);
            bi = static_cast<int>(i);
            bj = static_cast<int>(j);
          }
        }
      }
      if (bi < 0 || best < kZeroEntry) break;
      // The first pick per LP solve is forced; afterwards only entries the
      // LP already made integral are taken, the rest goes back through the
      // residual re-solve with the committed gains folded in.
      if (forced && best < kIntegralEntry) break;
      commit(active_talks[bi], active_slots[bj]);
      talk_done[bi] = true;
      slot_done[bj] = true;
      forced = true;
    }
    if (!forced)
      Fail(ErrorCode::kNumericalFailure, "rounding made no progress on the LP solution");

    std::vector<int> next_talks, next_slots;
    for (std::size_t i = 0; i < active_talks.size(); ++i)
      if (!talk_done[i]) next_talks.push_back(active_talks[i]);
    for (std::size_t j = 0; j < active_slots.size(); ++j)
      if (!slot_done[j]) next_slots.push_back(active_slots[j]);
    active_talks = std::move(next_talks);
    active_slots = std::move(next_slots);
  }
  std::sort(out.assignment.begin(), out.assignment.end());
  return out;
}

SolveResult SolveRrfs(const SchedulingInstance& instance, const JointObjective& objective,
                      double tolerance) {
  ValidateInstance(instance);
  ValidateObjective(objective);
  SolveResult result;
  result.method = "rrfs";
  result.objective_spec = objective;

  const Matrix crowd = CrowdMatrix(instance);
  std::vector<int> talks(instance.num_talks()), slots(instance.num_slots());
  std::iota(talks.begin(), talks.end(), 0);
  std::iota(slots.begin(), slots.end(), 0);
  result.schedule =
      SolveRrfsOnView(instance, objective, crowd, AllIdealCumulativeGains(instance),
                      std::move(talks), std::move(slots), tolerance, &result);
  // Reported numbers always use full-instance normalizers.
  result.objective = ScalarizedObjective(instance, result.schedule, objective);
  result.tep = Tep(instance, MultiRoundSchedule::single(result.schedule));
  return result;
}

}  // namespace fairconf
