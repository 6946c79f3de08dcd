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

#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace fairconf {

namespace {

// Slots each talk occupies, in assignment order across rounds.
std::vector<std::vector<int>> SlotsPerTalk(const SchedulingInstance& instance,
                                           const MultiRoundSchedule& schedule) {
  std::vector<std::vector<int>> slots(instance.num_talks());
  for (const auto& round : schedule.rounds)
    for (const auto& [t, s] : round.assignment) slots[t].push_back(s);
  return slots;
}

}  // namespace

double CumulativeGain(const SchedulingInstance& instance,
                      const MultiRoundSchedule& schedule, std::size_t p) {
  double gain = 0.0;
  for (const auto& round : schedule.rounds)
    for (const auto& [t, s] : round.assignment)
      gain += instance.interest(p, t) * instance.availability(p, s);
  return gain;
}

double IdealCumulativeGain(const SchedulingInstance& instance, std::size_t p) {
  const std::size_t n = instance.num_talks();
  std::vector<double> interests(instance.interest.row(p).begin(),
                                instance.interest.row(p).end());
  std::vector<double> avail(instance.availability.row(p).begin(),
                            instance.availability.row(p).end());
  std::sort(interests.begin(), interests.end(), std::greater<>());
  std::sort(avail.begin(), avail.end(), std::greater<>());
  double gain = 0.0;
  for (std::size_t k = 0; k < n; ++k) gain += interests[k] * avail[k];
  return gain;
}

double Ncg(const SchedulingInstance& instance, const MultiRoundSchedule& schedule,
           std::size_t p) {
  const double icg = IdealCumulativeGain(instance, p);
  if (icg <= 0.0) return 1.0;
  return CumulativeGain(instance, schedule, p) / icg;
}

double ExpectedCrowdAt(const SchedulingInstance& instance, std::size_t t, std::size_t s) {
  double crowd = 0.0;
  for (std::size_t p = 0; p < instance.num_participants(); ++p)
    crowd += instance.weight(p) * instance.interest(p, t) * instance.availability(p, s);
  return crowd;
}

double ExpectedCrowd(const SchedulingInstance& instance,
                     const MultiRoundSchedule& schedule, std::size_t t) {
  double crowd = 0.0;
  for (const auto& round : schedule.rounds)
    for (const auto& [talk, s] : round.assignment)
      if (static_cast<std::size_t>(talk) == t) crowd += ExpectedCrowdAt(instance, t, s);
  return crowd;
}

double IdealExpectedCrowd(const SchedulingInstance& instance, std::size_t t) {
  double best = 0.0;
  for (std::size_t s = 0; s < instance.num_slots(); ++s)
    best = std::max(best, ExpectedCrowdAt(instance, t, s));
  return best;
}

double Nec(const SchedulingInstance& instance, const MultiRoundSchedule& schedule,
           std::size_t t) {
  const double iec = IdealExpectedCrowd(instance, t);
  if (iec <= 0.0) return 1.0;
  return ExpectedCrowd(instance, schedule, t) / iec;
}

double Tep(const SchedulingInstance& instance, const MultiRoundSchedule& schedule) {
  double total = 0.0;
  for (const auto& round : schedule.rounds)
    for (const auto& [t, s] : round.assignment) total += ExpectedCrowdAt(instance, t, s);
  return total;
}

namespace {

// Max-min gap over the values whose indices are not flagged degenerate.
double MaxMinGap(const std::vector<double>& values, const std::vector<bool>& degenerate) {
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (degenerate[i]) continue;
    if (!any) {
      lo = hi = values[i];
      any = true;
    } else {
      lo = std::min(lo, values[i]);
      hi = std::max(hi, values[i]);
    }
  }
  return any ? hi - lo : 0.0;
}

std::vector<bool> DegenerateParticipants(const SchedulingInstance& instance) {
  std::vector<bool> flags(instance.num_participants(), false);
  for (std::size_t p = 0; p < flags.size(); ++p)
    flags[p] = IdealCumulativeGain(instance, p) <= 0.0;
  return flags;
}

std::vector<bool> DegenerateTalks(const SchedulingInstance& instance) {
  std::vector<bool> flags(instance.num_talks(), false);
  for (std::size_t t = 0; t < flags.size(); ++t)
    flags[t] = IdealExpectedCrowd(instance, t) <= 0.0;
  return flags;
}

}  // namespace

double ParticipantUnfairness(const SchedulingInstance& instance,
                             const MultiRoundSchedule& schedule) {
  std::vector<double> ncg(instance.num_participants());
  for (std::size_t p = 0; p < ncg.size(); ++p) ncg[p] = Ncg(instance, schedule, p);
  return MaxMinGap(ncg, DegenerateParticipants(instance));
}

double SpeakerUnfairness(const SchedulingInstance& instance,
                         const MultiRoundSchedule& schedule) {
  std::vector<double> nec(instance.num_talks());
  for (std::size_t t = 0; t < nec.size(); ++t) nec[t] = Nec(instance, schedule, t);
  return MaxMinGap(nec, DegenerateTalks(instance));
}

double Gini(const std::vector<double>& values) {
  if (values.empty()) Fail(ErrorCode::kInvalidArgument, "gini needs at least one value");
  for (double v : values)
    if (v < 0.0) Fail(ErrorCode::kInvalidArgument, "gini values must be non-negative");
  const std::size_t k = values.size();
  double sum = std::accumulate(values.begin(), values.end(), 0.0);
  if (sum <= 0.0) Fail(ErrorCode::kAllZero, "gini undefined for an all-zero vector");

  // Sorted form of sum_ij |x_i - x_j| / (2 k^2 mean); the pairwise double loop
  // is kept as an oracle in the tests.
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  double weighted = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    weighted += (2.0 * static_cast<double>(i + 1) - static_cast<double>(k) - 1.0) * sorted[i];
  return weighted / (static_cast<double>(k) * sum);
}

std::map<int, int> ContiguityHistogram(const SchedulingInstance& instance,
                                       const MultiRoundSchedule& schedule) {
  std::vector<int> occupied;
  for (const auto& round : schedule.rounds)
    for (const auto& [t, s] : round.assignment) occupied.push_back(s);
  std::sort(occupied.begin(), occupied.end());
  occupied.erase(std::unique(occupied.begin(), occupied.end()), occupied.end());

  std::map<int, int> histogram;
  std::size_t i = 0;
  while (i < occupied.size()) {
    std::size_t j = i;
    while (j + 1 < occupied.size() && occupied[j + 1] == occupied[j] + 1) ++j;
    ++histogram[static_cast<int>(j - i + 1)];
    i = j + 1;
  }
  (void)instance;
  return histogram;
}

std::vector<std::vector<double>> RepetitionGaps(const SchedulingInstance& instance,
                                                const MultiRoundSchedule& schedule) {
  auto slots = SlotsPerTalk(instance, schedule);
  std::vector<std::vector<double>> gaps(instance.num_talks());
  for (std::size_t t = 0; t < slots.size(); ++t) {
    if (slots[t].size() < 2) continue;
    std::vector<std::int64_t> starts;
    for (int s : slots[t]) starts.push_back(instance.slots[s].start_utc_min);
    std::sort(starts.begin(), starts.end());
    for (std::size_t i = 1; i < starts.size(); ++i)
      gaps[t].push_back(static_cast<double>(starts[i] - starts[i - 1]) / 60.0);
  }
  return gaps;
}

MetricsReport ComputeMetrics(const SchedulingInstance& instance,
                             const MultiRoundSchedule& schedule) {
  ValidateMultiRound(instance, schedule);
  const std::size_t m = instance.num_participants();
  const std::size_t n = instance.num_talks();

  MetricsReport report;
  report.ncg.resize(m);
  report.nec.resize(n);

  const auto degenerate_p = DegenerateParticipants(instance);
  const auto degenerate_t = DegenerateTalks(instance);
  for (std::size_t p = 0; p < m; ++p) {
    report.ncg[p] = Ncg(instance, schedule, p);
    if (degenerate_p[p]) report.degenerate_participants.push_back(static_cast<int>(p));
  }
  for (std::size_t t = 0; t < n; ++t) {
    report.nec[t] = Nec(instance, schedule, t);
    if (degenerate_t[t]) report.degenerate_talks.push_back(static_cast<int>(t));
  }

  report.tep = Tep(instance, schedule);
  report.participant_unfairness = MaxMinGap(report.ncg, degenerate_p);
  report.speaker_unfairness = MaxMinGap(report.nec, degenerate_t);
  report.ncg_mean =
      std::accumulate(report.ncg.begin(), report.ncg.end(), 0.0) / static_cast<double>(m);
  report.nec_mean =
      std::accumulate(report.nec.begin(), report.nec.end(), 0.0) / static_cast<double>(n);

  auto gini_of = [](const std::vector<double>& values,
                    const std::vector<bool>& degenerate) -> std::optional<double> {
    std::vector<double> kept;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (!degenerate[i]) kept.push_back(values[i]);
    if (kept.empty()) return std::nullopt;
    try {
      return Gini(kept);
    } catch (const Error&) {
      return std::nullopt;  // all-zero satisfaction; inequality undefined
    }
  };
  report.ncg_gini = gini_of(report.ncg, degenerate_p);
  report.nec_gini = gini_of(report.nec, degenerate_t);

  report.contiguity = ContiguityHistogram(instance, schedule);
  report.repetition_gaps = RepetitionGaps(instance, schedule);
  return report;
}

std::string MetricsToJson(const SchedulingInstance& instance, const MetricsReport& report) {
  nlohmann::json doc;
  doc["tep"] = report.tep;
  doc["participant_unfairness"] = report.participant_unfairness;
  doc["speaker_unfairness"] = report.speaker_unfairness;
  doc["ncg_mean"] = report.ncg_mean;
  doc["nec_mean"] = report.nec_mean;
  doc["ncg_gini"] = report.ncg_gini ? nlohmann::json(*report.ncg_gini) : nlohmann::json();
  doc["nec_gini"] = report.nec_gini ? nlohmann::json(*report.nec_gini) : nlohmann::json();

  nlohmann::json ncg = nlohmann::json::object();
  for (std::size_t p = 0; p < report.ncg.size(); ++p)
    ncg[instance.participants[p]] = report.ncg[p];
  doc["ncg"] = std::move(ncg);
  nlohmann::json nec = nlohmann::json::object();
  for (std::size_t t = 0; t < report.nec.size(); ++t)
    nec[instance.talks[t].id] = report.nec[t];
  doc["nec"] = std::move(nec);

  nlohmann::json contiguity = nlohmann::json::object();
  for (const auto& [run, count] : report.contiguity)
    contiguity[std::to_string(run)] = count;
  doc["contiguity"] = std::move(contiguity);

  nlohmann::json gaps = nlohmann::json::object();
  for (std::size_t t = 0; t < report.repetition_gaps.size(); ++t)
    if (!report.repetition_gaps[t].empty())
      gaps[instance.talks[t].id] = report.repetition_gaps[t];
  doc["repetition_gaps_hours"] = std::move(gaps);

  nlohmann::json degenerate = nlohmann::json::object();
  nlohmann::json dps = nlohmann::json::array();
  for (int p : report.degenerate_participants) dps.push_back(instance.participants[p]);
  nlohmann::json dts = nlohmann::json::array();
  for (int t : report.degenerate_talks) dts.push_back(instance.talks[t].id);
  degenerate["participants"] = std::move(dps);
  degenerate["talks"] = std::move(dts);
  doc["degenerate"] = std::move(degenerate);

  return doc.dump(2) + "\n";
}

std::string MetricsCsvHeader() {
  return "method,w_eff,lambda1,lambda2,k,TEP,NCG_mean,NCG_gap,NCG_gini,NEC_mean,NEC_gap,"
         "NEC_gini,runtime_ms";
}

std::string MetricsCsvRow(const std::string& method, double w_eff, double lambda1,
                          double lambda2, int clusters, const MetricsReport& report,
                          std::int64_t runtime_ms, int precision) {
  std::ostringstream row;
  if (precision >= 0) {
    row.setf(std::ios::fixed);
    row.precision(precision);
  } else {
    row.precision(17);
  }
  auto opt = [&](const std::optional<double>& v) -> std::string {
    if (!v) return "";
    std::ostringstream cell;
    if (precision >= 0) {
      cell.setf(std::ios::fixed);
      cell.precision(precision);
    } else {
      cell.precision(17);
    }
    cell << *v;
    return cell.str();
  };
  row << method << "," << w_eff << "," << lambda1 << "," << lambda2 << "," << clusters
      << "," << report.tep << "," << report.ncg_mean << ","
      << report.participant_unfairness << "," << opt(report.ncg_gini) << ","
      << report.nec_mean << "," << report.speaker_unfairness << "," << opt(report.nec_gini)
      << "," << runtime_ms;
  return row.str();
}

std::vector<double> AllIdealCumulativeGains(const SchedulingInstance& instance) {
  std::vector<double> icg(instance.num_participants());
  for (std::size_t p = 0; p < icg.size(); ++p) icg[p] = IdealCumulativeGain(instance, p);
  return icg;
}

std::vector<double> AllIdealExpectedCrowds(const SchedulingInstance& instance) {
  std::vector<double> iec(instance.num_talks());
  for (std::size_t t = 0; t < iec.size(); ++t) iec[t] = IdealExpectedCrowd(instance, t);
  return iec;
}

}  // namespace fairconf
