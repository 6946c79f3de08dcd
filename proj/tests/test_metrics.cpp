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

#include <algorithm>
#include <map>

#include <doctest.h>

#include "datagen.hpp"
#include "errors.hpp"
#include "metrics.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace fairconf;
using namespace fairconf::testing;

namespace {

MultiRoundSchedule Single(const std::vector<int>& slot_of_talk) {
  return MultiRoundSchedule::single(ScheduleFromVector(slot_of_talk));
}

}  // namespace

TEST_CASE("cumulative gain on the worked examples") {
  const auto ex2 = LoadFixture("example2.json");
  // t1 -> s1, t2 -> s3
  CHECK(CumulativeGain(ex2, Single({0, 2}), 0) == doctest::Approx(1.4).epsilon(1e-12));

  const auto ex3 = LoadFixture("example3.json");
  // t1 -> s2, t2 -> s3: p1 gains 1.0
  CHECK(CumulativeGain(ex3, Single({1, 2}), 0) == doctest::Approx(1.0).epsilon(1e-12));

  auto zero = ex2;
  zero.availability = Matrix(1, 3, 0.0);
  CHECK(CumulativeGain(zero, Single({0, 2}), 0) == 0.0);
}

TEST_CASE("ideal cumulative gain pairs sorted scores") {
  const auto ex2 = LoadFixture("example2.json");
  CHECK(IdealCumulativeGain(ex2, 0) == doctest::Approx(1.4).epsilon(1e-12));
  const auto ex3 = LoadFixture("example3.json");
  CHECK(IdealCumulativeGain(ex3, 0) == doctest::Approx(1.7).epsilon(1e-12));
  CHECK(IdealCumulativeGain(ex3, 1) == doctest::Approx(1.7).epsilon(1e-12));
}

TEST_CASE("ICG dominates CG over random schedules") {
  Rng rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const auto instance = GenUniform(4, 5, 7, 1000 + trial);
    std::vector<double> icg(instance.num_participants());
    for (std::size_t p = 0; p < icg.size(); ++p) icg[p] = IdealCumulativeGain(instance, p);
    for (int draw = 0; draw < 100; ++draw) {
      // Random injective assignment.
      std::vector<int> slots(instance.num_slots());
      for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = static_cast<int>(i);
      for (std::size_t i = slots.size() - 1; i > 0; --i)
        std::swap(slots[i], slots[rng.uniform_below(i + 1)]);
      std::vector<int> assignment(slots.begin(), slots.begin() + instance.num_talks());
      for (std::size_t p = 0; p < icg.size(); ++p)
        CHECK(CumulativeGain(instance, Single(assignment), p) <= icg[p] + 1e-12);
    }
  }
}

TEST_CASE("ICG and IEC equal the enumeration maximum") {
  const auto instance = GenUniform(3, 3, 5, 77);
  std::vector<double> best_cg(3, 0.0), best_ec(3, 0.0);
  EnumerateSchedules(3, 5, [&](const std::vector<int>& assignment) {
    const auto schedule = Single(assignment);
    for (std::size_t p = 0; p < 3; ++p)
      best_cg[p] = std::max(best_cg[p], CumulativeGain(instance, schedule, p));
    for (std::size_t t = 0; t < 3; ++t)
      best_ec[t] = std::max(best_ec[t], ExpectedCrowd(instance, schedule, t));
  });
  for (std::size_t p = 0; p < 3; ++p)
    CHECK(IdealCumulativeGain(instance, p) == doctest::Approx(best_cg[p]).epsilon(1e-12));
  for (std::size_t t = 0; t < 3; ++t)
    CHECK(IdealExpectedCrowd(instance, t) == doctest::Approx(best_ec[t]).epsilon(1e-12));
}

TEST_CASE("NCG values from the claims") {
  const auto ex1 = LoadFixture("example1.json");
  CHECK(Ncg(ex1, Single({1}), 0) == doctest::Approx(0.49).epsilon(1e-12));
  CHECK(Ncg(ex1, Single({1}), 1) == doctest::Approx(0.49).epsilon(1e-12));

  const auto ex3 = LoadFixture("example3.json");
  CHECK(Ncg(ex3, Single({0, 3}), 0) == doctest::Approx(1.14 / 1.7).epsilon(1e-12));
  CHECK(Ncg(ex3, Single({0, 3}), 1) == doctest::Approx(1.14 / 1.7).epsilon(1e-12));
}

TEST_CASE("expected crowd and its ideal") {
  const auto ex2 = LoadFixture("example2.json");
  CHECK(IdealExpectedCrowd(ex2, 0) == doctest::Approx(1.0));
  CHECK(IdealExpectedCrowd(ex2, 1) == doctest::Approx(0.5));

  const auto ex3 = LoadFixture("example3.json");
  CHECK(IdealExpectedCrowd(ex3, 0) == doctest::Approx(2.0));
  CHECK(IdealExpectedCrowd(ex3, 1) == doctest::Approx(1.4));

  // With one slot, EC always equals IEC.
  SchedulingInstance tiny;
  tiny.participants = {"p1", "p2"};
  tiny.talks = {{"t1", {}}};
  tiny.slots = MakeSlotGrid(1, 60);
  tiny.interest = Matrix(2, 1, 0.7);
  tiny.availability = Matrix(2, 1, 0.3);
  CHECK(ExpectedCrowd(tiny, Single({0}), 0) ==
        doctest::Approx(IdealExpectedCrowd(tiny, 0)));
}

TEST_CASE("NEC values from the claims") {
  const auto ex2 = LoadFixture("example2.json");
  CHECK(Nec(ex2, Single({0, 2}), 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(Nec(ex2, Single({0, 2}), 1) == doctest::Approx(0.8).epsilon(1e-12));

  const auto ex3 = LoadFixture("example3.json");
  CHECK(Nec(ex3, Single({1, 2}), 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(Nec(ex3, Single({1, 2}), 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("TEP values and the utilitarian identity") {
  const auto ex1 = LoadFixture("example1.json");
  CHECK(Tep(ex1, Single({1})) == doctest::Approx(0.98).epsilon(1e-12));
  const auto ex2 = LoadFixture("example2.json");
  CHECK(Tep(ex2, Single({2, 1})) == doctest::Approx(1.175).epsilon(1e-12));

  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto instance = GenUniform(3, 3, 4, 9000 + trial);
    std::vector<int> assignment = {static_cast<int>(rng.uniform_below(4)), -1, -1};
    // any fixed valid schedule
    assignment = {0, 1, 2};
    const auto schedule = Single(assignment);
    double sum_cg = 0.0, sum_ec = 0.0;
    for (std::size_t p = 0; p < 3; ++p)
      sum_cg += instance.weight(p) * CumulativeGain(instance, schedule, p);
    for (std::size_t t = 0; t < 3; ++t) sum_ec += ExpectedCrowd(instance, schedule, t);
    const double tep = Tep(instance, schedule);
    CHECK(tep == doctest::Approx(sum_cg).epsilon(1e-12));
    CHECK(tep == doctest::Approx(sum_ec).epsilon(1e-12));
  }
}

TEST_CASE("unfairness gaps from the claims") {
  const auto ex1 = LoadFixture("example1.json");
  CHECK(ParticipantUnfairness(ex1, Single({0})) == doctest::Approx(1.0));
  const auto ex3 = LoadFixture("example3.json");
  CHECK(SpeakerUnfairness(ex3, Single({0, 3})) == doctest::Approx(0.8).epsilon(1e-9));

  const auto ex2 = LoadFixture("example2.json");  // single participant
  CHECK(ParticipantUnfairness(ex2, Single({0, 2})) == 0.0);
}

TEST_CASE("unfairness is invariant under participant and talk permutation") {
  const auto instance = GenUniform(4, 3, 5, 31);
  const auto schedule = Single({2, 0, 4});
  auto permuted = instance;
  // Swap participants 0 and 3, talks 0 and 2 (interest columns follow talks).
  for (std::size_t t = 0; t < 3; ++t)
    std::swap(permuted.interest(0, t), permuted.interest(3, t));
  for (std::size_t s = 0; s < 5; ++s)
    std::swap(permuted.availability(0, s), permuted.availability(3, s));
  CHECK(ParticipantUnfairness(permuted, schedule) ==
        doctest::Approx(ParticipantUnfairness(instance, schedule)).epsilon(1e-12));

  auto talk_swapped = instance;
  for (std::size_t p = 0; p < 4; ++p)
    std::swap(talk_swapped.interest(p, 0), talk_swapped.interest(p, 2));
  const auto swapped_schedule = Single({4, 0, 2});
  CHECK(SpeakerUnfairness(talk_swapped, swapped_schedule) ==
        doctest::Approx(SpeakerUnfairness(instance, schedule)).epsilon(1e-12));
}

TEST_CASE("gini basics") {
  CHECK(Gini({0.4, 0.4, 0.4}) == doctest::Approx(0.0));
  CHECK(Gini({0.0, 1.0}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(Gini({0.0, 0.0}), Error);
  CHECK_THROWS_AS(Gini({}), Error);
  CHECK_THROWS_AS(Gini({-0.1, 0.4}), Error);
}

TEST_CASE("gini matches the pairwise oracle and is scale invariant") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> values(3 + rng.uniform_below(20));
    for (double& v : values) v = rng.uniform();
    values[0] += 0.01;  // keep the mean positive
    const double g = Gini(values);
    CHECK(g == doctest::Approx(PairwiseGini(values)).epsilon(1e-10));
    std::vector<double> scaled = values;
    const double factor = 0.5 + 10.0 * rng.uniform();
    for (double& v : scaled) v *= factor;
    CHECK(Gini(scaled) == doctest::Approx(g).epsilon(1e-10));
    CHECK(g >= 0.0);
    CHECK(g < 1.0);
  }
}

TEST_CASE("contiguity histogram") {
  const auto instance = GenUniform(2, 6, 12, 8);
  SUBCASE("one block") {
    const auto schedule = Single({0, 1, 2, 3, 4, 5});
    const std::map<int, int> expect = {{6, 1}};
    CHECK(ContiguityHistogram(instance, schedule) == expect);
  }
  SUBCASE("runs of 2, 1 and 3") {
    const auto schedule = Single({0, 1, 5, 7, 8, 9});
    const std::map<int, int> expect = {{1, 1}, {2, 1}, {3, 1}};
    CHECK(ContiguityHistogram(instance, schedule) == expect);
  }
  SUBCASE("no assignments") {
    MultiRoundSchedule empty;
    CHECK(ContiguityHistogram(instance, empty).empty());
  }
}

TEST_CASE("repetition gaps in hours") {
  SchedulingInstance instance;
  instance.participants = {"p1"};
  instance.talks = {{"t1", {}}, {"t2", {}}};
  instance.slots = {{"s1", 9 * 60, 30},   {"s2", 21 * 60, 30},
                    {"s3", 24 * 60, 30},  {"s4", 28 * 60, 30},
                    {"s5", 33 * 60, 30}};
  instance.interest = Matrix(1, 2, 1.0);
  instance.availability = Matrix(1, 5, 1.0);

  MultiRoundSchedule schedule;
  schedule.rounds.push_back({{{0, 0}, {1, 2}}});
  schedule.rounds.push_back({{{0, 1}}});
  auto gaps = RepetitionGaps(instance, schedule);
  REQUIRE(gaps[0].size() == 1);
  CHECK(gaps[0][0] == doctest::Approx(12.0));
  CHECK(gaps[1].empty());

  MultiRoundSchedule three;
  three.rounds.push_back({{{0, 2}}});   // 24h
  three.rounds.push_back({{{0, 3}}});   // 28h
  three.rounds.push_back({{{0, 4}}});   // 33h
  gaps = RepetitionGaps(instance, three);
  REQUIRE(gaps[0].size() == 2);
  CHECK(gaps[0][0] == doctest::Approx(4.0));
  CHECK(gaps[0][1] == doctest::Approx(5.0));
}

TEST_CASE("degenerate participants report NCG 1 and stay out of the gap") {
  auto instance = LoadFixture("example1.json");
  // p2 loses all interest: ICG = 0.
  instance.interest(1, 0) = 0.0;
  const auto report = ComputeMetrics(instance, Single({0}));
  CHECK(report.ncg[1] == 1.0);
  CHECK(report.degenerate_participants == std::vector<int>{1});
  CHECK(report.participant_unfairness == 0.0);  // only p1 in scope
}

TEST_CASE("single-round metrics stay in bounds on random instances") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto instance = GenUniform(5, 4, 6, 400 + trial);
    EnumerateSchedules(4, 6, [&](const std::vector<int>& assignment) {
      const auto report = ComputeMetrics(instance, Single(assignment));
      for (double v : report.ncg) {
        CHECK(v >= -1e-12);
        CHECK(v <= 1.0 + 1e-12);
      }
      for (double v : report.nec) {
        CHECK(v >= -1e-12);
        CHECK(v <= 1.0 + 1e-12);
      }
      CHECK(report.participant_unfairness >= 0.0);
      CHECK(report.participant_unfairness <= 1.0 + 1e-12);
      CHECK(report.speaker_unfairness >= 0.0);
      CHECK(report.speaker_unfairness <= 1.0 + 1e-12);
    });
    break;  // one instance of full enumeration is enough here
  }
}

TEST_CASE("metrics csv row has the canonical column count") {
  const auto instance = LoadFixture("example2.json");
  const auto report = ComputeMetrics(instance, Single({0, 2}));
  const std::string header = MetricsCsvHeader();
  const std::string row = MetricsCsvRow("em", 1.0, 0.0, 0.0, 0, report, 12);
  const auto count_commas = [](const std::string& text) {
    return std::count(text.begin(), text.end(), ',');
  };
  CHECK(count_commas(header) == count_commas(row));
}
