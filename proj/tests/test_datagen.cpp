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

#include <cmath>

#include <doctest.h>

#include "datagen.hpp"
#include "errors.hpp"
#include "metrics.hpp"
#include "oracles.hpp"
#include "solvers.hpp"

using namespace fairconf;
using namespace fairconf::testing;

TEST_CASE("uniform generator shape, range and determinism") {
  const auto a = GenUniform(10, 10, 10, 42);
  CHECK(a.interest.rows() == 10);
  CHECK(a.interest.cols() == 10);
  CHECK(a.availability.cols() == 10);
  CHECK_NOTHROW(ValidateInstance(a));

  const auto b = GenUniform(10, 10, 10, 42);
  CHECK(a.interest == b.interest);
  CHECK(a.availability == b.availability);

  const auto c = GenUniform(10, 10, 10, 43);
  CHECK_FALSE(a.interest == c.interest);

  CHECK_THROWS_AS(GenUniform(3, 5, 4, 1), Error);  // n > l
}

TEST_CASE("uniform entries average to one half") {
  const auto instance = GenUniform(50, 50, 50, 7);
  double sum = 0.0;
  for (std::size_t p = 0; p < 50; ++p)
    for (std::size_t t = 0; t < 50; ++t) sum += instance.interest(p, t);
  CHECK(sum / 2500.0 == doctest::Approx(0.5).epsilon(0.1));
  CHECK(std::fabs(sum / 2500.0 - 0.5) < 0.05);
}

TEST_CASE("timezone availability marks the 9-to-5 block") {
  const auto slots = MakeSlotGrid(48, 30);
  const auto avail = GenTimezoneAvailability({0}, slots);
  int available = 0;
  for (std::size_t s = 0; s < 48; ++s) available += avail(0, s) > 0.5 ? 1 : 0;
  CHECK(available == 16);
  CHECK(avail(0, 17) == 0.0);  // 08:30
  CHECK(avail(0, 18) == 1.0);  // 09:00
  CHECK(avail(0, 33) == 1.0);  // 16:30
  CHECK(avail(0, 34) == 0.0);  // 17:00
}

TEST_CASE("timezone offset shifts the block cyclically") {
  const auto slots = MakeSlotGrid(48, 30);
  const auto base = GenTimezoneAvailability({0}, slots);
  const auto shifted = GenTimezoneAvailability({720}, slots);
  for (std::size_t s = 0; s < 48; ++s) {
    // +720 minutes moves local time forward 24 half-hour slots.
    CHECK(shifted(0, s) == base(0, (s + 24) % 48));
  }
  const auto full_day = GenTimezoneAvailability({1440}, slots);
  for (std::size_t s = 0; s < 48; ++s) CHECK(full_day(0, s) == base(0, s));
}

TEST_CASE("timezone generator insists on whole days") {
  CHECK_THROWS_AS(GenTimezoneAvailability({0}, MakeSlotGrid(10, 30)), Error);
}

TEST_CASE("bernoulli interest follows the popularity ratio") {
  const std::vector<double> flat = {3.0, 3.0, 3.0};
  const auto all_ones = GenInterestBernoulli(flat, 5, 11);
  for (std::size_t p = 0; p < 5; ++p)
    for (std::size_t t = 0; t < 3; ++t) CHECK(all_ones(p, t) == 1.0);

  const std::vector<double> popularity = {10.0, 5.0, 1.0};
  const auto interest = GenInterestBernoulli(popularity, 2000, 12);
  for (std::size_t t = 0; t < 3; ++t) {
    double mean = 0.0;
    for (std::size_t p = 0; p < 2000; ++p) mean += interest(p, t);
    mean /= 2000.0;
    CHECK(std::fabs(mean - popularity[t] / 10.0) < 0.05);
  }
}

TEST_CASE("normal interest clips into the unit interval") {
  const std::vector<double> popularity = {4.0, 2.0, 0.0};
  const auto interest = GenInterestNormal(popularity, 500, 13);
  for (std::size_t p = 0; p < 500; ++p) {
    for (std::size_t t = 0; t < 3; ++t) {
      CHECK(interest(p, t) >= 0.0);
      CHECK(interest(p, t) <= 1.0);
    }
    CHECK(interest(p, 2) == 0.0);  // ratio 0 stays 0
  }
  // Ratio 1 draws N(1, 0.25) clipped at 1: the upper tail folds onto 1, so
  // the clipped mean sits near 1 - 0.25 * phi(0) ~ 0.9.
  double mean0 = 0.0;
  for (std::size_t p = 0; p < 500; ++p) mean0 += interest(p, 0);
  CHECK(mean0 / 500.0 == doctest::Approx(0.9).epsilon(0.05));
}

TEST_CASE("partition instance matches the reduction") {
  const auto instance = GenPartitionInstance({3, 1, 2});
  CHECK(instance.num_participants() == 2);
  CHECK(instance.num_talks() == 3);
  CHECK(instance.num_slots() == 6);
  CHECK(instance.interest(0, 0) == doctest::Approx(0.5));
  CHECK(instance.interest(1, 2) == doctest::Approx(2.0 / 6.0));
  CHECK(IdealCumulativeGain(instance, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(IdealCumulativeGain(instance, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(GenPartitionInstance({}), Error);
  CHECK_THROWS_AS(GenPartitionInstance({2, -1}), Error);
}

TEST_CASE("fair split exists iff the numbers partition evenly") {
  SUBCASE("{1,1} splits") {
    const auto instance = GenPartitionInstance({1, 1});
    const auto solved = SolveExact(instance, {0.0, 1.0, 0.0});
    CHECK(ParticipantUnfairness(instance, MultiRoundSchedule::single(solved.schedule)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(HasEqualBipartition({1, 1}));
  }
  SUBCASE("{1,2} cannot split") {
    const auto instance = GenPartitionInstance({1, 2});
    CHECK(BestParticipantFairnessByEnumeration(instance) > 1e-9);
    CHECK_FALSE(HasEqualBipartition({1, 2}));
  }
  SUBCASE("small multisets agree with the subset-sum oracle") {
    const std::vector<std::vector<std::int64_t>> groups = {
        {2, 3, 5}, {1, 2, 4}, {4, 4}, {1, 1, 1}, {5, 2, 3, 4}, {9, 1, 3, 5}};
    for (const auto& group : groups) {
      const auto instance = GenPartitionInstance(group);
      const double best = BestParticipantFairnessByEnumeration(instance);
      CHECK((best <= 1e-9) == HasEqualBipartition(group));
    }
  }
}

TEST_CASE("presets have the documented shapes") {
  const auto fatrec = GenPresetFatrec(1);
  CHECK(fatrec.num_participants() == 40);
  CHECK(fatrec.num_talks() == 11);
  CHECK(fatrec.num_slots() == 96);
  CHECK_NOTHROW(ValidateInstance(fatrec));

  const auto recsys = GenPresetRecsys(1);
  CHECK(recsys.num_participants() == 1112);
  CHECK(recsys.num_talks() == 26);
  CHECK(recsys.num_slots() == 48);
  CHECK_NOTHROW(ValidateInstance(recsys));

  CHECK_THROWS_AS(GenPreset("unknown", 1), Error);
}
