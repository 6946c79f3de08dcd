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

#ifndef FAIRCONF_METRICS_HPP_
#define FAIRCONF_METRICS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "model.hpp"

namespace fairconf {

// Satisfaction and fairness quantities for one (instance, schedule) pair.
//
// Conventions: a participant whose best achievable gain is zero (all-zero
// interest or availability) cannot be affected by any schedule; their
// normalized gain is reported as 1 and they are excluded from the max-min
// and gini statistics. Same for talks with zero ideal crowd. The excluded
// indices are listed so reports stay auditable.
struct MetricsReport {
  std::vector<double> ncg;  // per participant
  std::vector<double> nec;  // per talk; may exceed 1 under repetition
  double tep = 0.0;
  double participant_unfairness = 0.0;  // max NCG - min NCG
  double speaker_unfairness = 0.0;      // max NEC - min NEC
  double ncg_mean = 0.0;
  double nec_mean = 0.0;
  std::optional<double> ncg_gini;
  std::optional<double> nec_gini;
  std::map<int, int> contiguity;                    // run length -> count
  std::vector<std::vector<double>> repetition_gaps;  // per talk, hours
  std::vector<int> degenerate_participants;
  std::vector<int> degenerate_talks;
};

// CG(p) = sum_t V_p(t) * A_p(slot of t), summed over every assignment in the
// schedule (a repeated talk contributes once per round it appears in).
double CumulativeGain(const SchedulingInstance& instance,
                      const MultiRoundSchedule& schedule, std::size_t p);

// Best achievable CG for p: pair the k-th largest interest with the k-th
// largest availability over the top-n slots.
double IdealCumulativeGain(const SchedulingInstance& instance, std::size_t p);

// CG / ICG; 1 by convention when ICG is zero.
double Ncg(const SchedulingInstance& instance, const MultiRoundSchedule& schedule,
           std::size_t p);

// Weighted expected crowd of talk t sitting in slot s.
double ExpectedCrowdAt(const SchedulingInstance& instance, std::size_t t, std::size_t s);

// Crowd accumulated by t over every slot the schedule assigns it to.
double ExpectedCrowd(const SchedulingInstance& instance,
                     const MultiRoundSchedule& schedule, std::size_t t);

// max over slots of the weighted crowd; the single-slot normalizer also used
// for repeated talks (so NEC > 1 signals a repetition benefit).
double IdealExpectedCrowd(const SchedulingInstance& instance, std::size_t t);

// EC / IEC; 1 by convention when IEC is zero.
double Nec(const SchedulingInstance& instance, const MultiRoundSchedule& schedule,
           std::size_t t);

// Total expected participation: sum of weighted gains over all assignments.
// Equals both sum_p w_p CG_p and sum_t EC_t.
double Tep(const SchedulingInstance& instance, const MultiRoundSchedule& schedule);

double ParticipantUnfairness(const SchedulingInstance& instance,
                             const MultiRoundSchedule& schedule);
double SpeakerUnfairness(const SchedulingInstance& instance,
                         const MultiRoundSchedule& schedule);

// Mean-normalized pairwise gini: sum_ij |x_i - x_j| / (2 k^2 mean).
// Throws AllZero when the mean is zero, InvalidArgument on negatives or an
// empty vector.
double Gini(const std::vector<double>& values);

// Run lengths of maximal blocks of consecutively-indexed occupied slots.
std::map<int, int> ContiguityHistogram(const SchedulingInstance& instance,
                                       const MultiRoundSchedule& schedule);

// Hours between consecutive assigned slot starts, per talk; empty list for
// talks scheduled at most once.
std::vector<std::vector<double>> RepetitionGaps(const SchedulingInstance& instance,
                                                const MultiRoundSchedule& schedule);

MetricsReport ComputeMetrics(const SchedulingInstance& instance,
                             const MultiRoundSchedule& schedule);

std::string MetricsToJson(const SchedulingInstance& instance, const MetricsReport& report);

// One flat CSV row for sweep aggregation (values at full precision).
std::string MetricsCsvHeader();
std::string MetricsCsvRow(const std::string& method, double w_eff, double lambda1,
                          double lambda2, int clusters, const MetricsReport& report,
                          std::int64_t runtime_ms, int precision = -1);

// Per-participant ICG and per-talk IEC vectors; shared by the LP builder and
// the solvers.
std::vector<double> AllIdealCumulativeGains(const SchedulingInstance& instance);
std::vector<double> AllIdealExpectedCrowds(const SchedulingInstance& instance);

}  // namespace fairconf

#endif  // FAIRCONF_METRICS_HPP_
