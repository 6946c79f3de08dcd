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
#include <cmath>

#include <doctest.h>

#include "datagen.hpp"
#include "errors.hpp"
#include "hungarian.hpp"
#include "metrics.hpp"
#include "oracles.hpp"
#include "solvers.hpp"

using namespace fairconf;
using namespace fairconf::testing;

namespace {

std::vector<int> Slots(const Schedule& schedule, std::size_t n) {
  return schedule.slot_of_talk(n);
}

}  // namespace

TEST_CASE("hungarian solves small matrices exactly") {
  Matrix cost(3, 3);
  const double values[3][3] = {{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) cost(i, j) = values[i][j];
  double total = 0.0;
  const auto match = HungarianMinCost(cost, &total);
  CHECK(total == doctest::Approx(5.0));  // 1 + 2 + 2
  std::vector<int> sorted = match;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2});
}

TEST_CASE("EM reproduces the worked examples") {
  const auto ex2 = LoadFixture("example2.json");
  const auto em2 = SolveEm(ex2);
  CHECK(em2.tep == doctest::Approx(1.4).epsilon(1e-12));
  CHECK(Slots(em2.schedule, 2) == std::vector<int>{0, 2});

  const auto ex1 = LoadFixture("example1.json");
  const auto em1 = SolveEm(ex1);
  CHECK(em1.tep == doctest::Approx(1.0).epsilon(1e-12));
  const int slot = Slots(em1.schedule, 1)[0];
  CHECK((slot == 0 || slot == 2));
}

TEST_CASE("EM is TEP-optimal against enumeration") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto instance =
        GenUniform(2 + trial % 7, 2 + trial % 5, 3 + trial % 6, 7000 + trial);
    const auto em = SolveEm(instance);
    CHECK(em.tep == doctest::Approx(BestTepByEnumeration(instance)).epsilon(1e-9));
    CHECK_NOTHROW(ValidateFullSchedule(instance, em.schedule));
  }
}

TEST_CASE("IAM matches the example and the identical-rows lemma") {
  const auto ex2 = LoadFixture("example2.json");
  const auto iam = SolveIam(ex2);
  CHECK(Slots(iam.schedule, 2) == std::vector<int>{0, 2});
  CHECK(iam.tep == doctest::Approx(1.4).epsilon(1e-12));

  // Identical availability rows: IAM achieves the EM optimum.
  for (int trial = 0; trial < 50; ++trial) {
    auto instance = GenUniform(4, 3, 5, 100 + trial);
    for (std::size_t p = 1; p < 4; ++p)
      for (std::size_t s = 0; s < 5; ++s)
        instance.availability(p, s) = instance.availability(0, s);
    const auto em = SolveEm(instance);
    const auto ranked = SolveIam(instance);
    CHECK(ranked.tep == doctest::Approx(em.tep).epsilon(1e-9));
  }
  // Identical interest rows: same conclusion.
  for (int trial = 0; trial < 50; ++trial) {
    auto instance = GenUniform(4, 3, 5, 200 + trial);
    for (std::size_t p = 1; p < 4; ++p)
      for (std::size_t t = 0; t < 3; ++t)
        instance.interest(p, t) = instance.interest(0, t);
    CHECK(SolveIam(instance).tep == doctest::Approx(SolveEm(instance).tep).epsilon(1e-9));
  }
}

TEST_CASE("IAM breaks ties by index") {
  SchedulingInstance flat;
  flat.participants = {"p1"};
  flat.talks = {{"t1", {}}, {"t2", {}}, {"t3", {}}};
  flat.slots = MakeSlotGrid(3, 60);
  flat.interest = Matrix(1, 3, 0.5);
  flat.availability = Matrix(1, 3, 0.5);
  const auto iam = SolveIam(flat);
  CHECK(Slots(iam.schedule, 3) == std::vector<int>{0, 1, 2});
}

TEST_CASE("exact solver trades efficiency for fairness on example 1") {
  const auto ex1 = LoadFixture("example1.json");
  const auto fair = SolveExact(ex1, {1.0, 1.0, 0.0});
  CHECK(Slots(fair.schedule, 1) == std::vector<int>{1});  // the 0.49/0.49 slot
  CHECK(fair.tep == doctest::Approx(0.98).epsilon(1e-12));

  // Sanity: pure efficiency picks s1 or s3 instead.
  const auto greedy = SolveExact(ex1, {1.0, 0.0, 0.0});
  CHECK(greedy.tep == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact solver finds the speaker-fair schedule of example 3") {
  const auto ex3 = LoadFixture("example3.json");
  const auto fair = SolveExact(ex3, {0.0, 0.0, 1.0});
  const auto schedule = MultiRoundSchedule::single(fair.schedule);
  CHECK(SpeakerUnfairness(ex3, schedule) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(Slots(fair.schedule, 2) == std::vector<int>{1, 2});
}

TEST_CASE("exact equals EM when only efficiency matters") {
  for (int trial = 0; trial < 10; ++trial) {
    const auto instance = GenUniform(3, 3, 5, 40 + trial);
    const auto em = SolveEm(instance);
    const auto exact = SolveExact(instance, {1.0, 0.0, 0.0});
    CHECK(exact.tep == doctest::Approx(em.tep).epsilon(1e-9));
  }
}

TEST_CASE("exact enumeration respects the budget") {
  const auto instance = GenUniform(2, 6, 12, 3);
  CHECK_THROWS_AS(SolveExact(instance, {1.0, 0.0, 0.0}, 1000), Error);
  try {
    SolveExact(instance, {1.0, 0.0, 0.0}, 1000);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceeded);
  }
  const auto counted = SolveExact(instance, {1.0, 0.0, 0.0});
  CHECK(counted.enumeration_count == CountSchedules(6, 12));
}

TEST_CASE("scalarized objective hand values") {
  const auto ex1 = LoadFixture("example1.json");
  const Schedule middle = ScheduleFromVector({1});
  CHECK(ScalarizedObjective(ex1, middle, {1.0, 1.0, 0.0}) ==
        doctest::Approx(0.98 / 2.0 + 0.0).epsilon(1e-12));

  // (1,0,0) is TEP / (W n) for any schedule.
  const auto instance = GenUniform(4, 3, 5, 9);
  EnumerateSchedules(3, 5, [&](const std::vector<int>& assignment) {
    const auto schedule = ScheduleFromVector(assignment);
    const double tep = Tep(instance, MultiRoundSchedule::single(schedule));
    CHECK(ScalarizedObjective(instance, schedule, {1.0, 0.0, 0.0}) ==
          doctest::Approx(tep / (4.0 * 3.0)).epsilon(1e-12));
  });
}

TEST_CASE("exact maximizes the scalarization against enumeration") {
  const JointObjective objective{1.0, 0.5, 0.25};
  for (int trial = 0; trial < 10; ++trial) {
    const auto instance = GenUniform(3, 3, 4, 600 + trial);
    const auto exact = SolveExact(instance, objective);
    double best = -10.0;
    EnumerateSchedules(3, 4, [&](const std::vector<int>& assignment) {
      best = std::max(best, ScalarizedObjective(instance, ScheduleFromVector(assignment),
                                                objective));
    });
    CHECK(exact.objective == doctest::Approx(best).epsilon(1e-10));
  }
}

TEST_CASE("rrfs reads the permutation off an integral LP") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto instance =
        GenUniform(3 + trial % 4, 2 + trial % 4, 4 + trial % 4, 7100 + trial);
    const auto em = SolveEm(instance);
    const auto rounded = SolveRrfs(instance, {1.0, 0.0, 0.0});
    CHECK(rounded.tep == doctest::Approx(em.tep).epsilon(1e-6));
    CHECK_NOTHROW(ValidateFullSchedule(instance, rounded.schedule));
  }
}

TEST_CASE("rrfs stays within 5 percent of exact on example 1") {
  const auto ex1 = LoadFixture("example1.json");
  const JointObjective objective{1.0, 1.0, 0.0};
  const auto exact = SolveExact(ex1, objective);
  const auto rounded = SolveRrfs(ex1, objective);
  CHECK(rounded.objective >= 0.95 * exact.objective);
}

TEST_CASE("rrfs equals exact on single-talk instances") {
  const std::vector<JointObjective> objectives = {
      {1.0, 0.0, 0.0}, {1.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.5, 0.25, 0.75}};
  for (int trial = 0; trial < 5; ++trial) {
    const auto instance = GenUniform(3, 1, 4, 7200 + trial);
    for (const auto& objective : objectives) {
      const auto exact = SolveExact(instance, objective);
      const auto rounded = SolveRrfs(instance, objective);
      CHECK(rounded.objective == doctest::Approx(exact.objective).epsilon(1e-9));
    }
  }
}

TEST_CASE("rrfs outer loop is bounded by the talk count") {
  for (int trial = 0; trial < 10; ++trial) {
    const auto instance = GenUniform(4, 5, 7, 7300 + trial);
    const auto rounded = SolveRrfs(instance, {1.0, 0.5, 0.5});
    CHECK(rounded.outer_iterations >= 1);
    CHECK(rounded.outer_iterations <= 5);
    CHECK_NOTHROW(ValidateFullSchedule(instance, rounded.schedule));
  }
}

TEST_CASE("partition soundness of the exact solver") {
  const std::vector<std::vector<std::int64_t>> groups = {
      {1, 1}, {1, 2}, {2, 2, 4}, {1, 3, 5}, {2, 5, 7}, {1, 2, 3, 4}};
  for (const auto& group : groups) {
    const auto instance = GenPartitionInstance(group);
    const auto solved = SolveExact(instance, {0.0, 1.0, 0.0});
    const double psi =
        ParticipantUnfairness(instance, MultiRoundSchedule::single(solved.schedule));
    CHECK((psi <= 1e-9) == HasEqualBipartition(group));
  }
}

TEST_CASE("scalarization monotonicity in lambda1 on a small grid") {
  const std::vector<double> lambdas = {0.0, 0.25, 0.5, 1.0};
  for (int trial = 0; trial < 3; ++trial) {
    const auto instance = GenUniform(4, 4, 4, 7500 + trial);
    double previous = 2.0;
    for (double l1 : lambdas) {
      const auto solved = SolveExact(instance, {1.0, l1, 0.5});
      const double psi = ParticipantUnfairness(
          instance, MultiRoundSchedule::single(solved.schedule));
      CHECK(psi <= previous + 1e-9);
      previous = psi;
    }
  }
}
