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

#include <filesystem>
#include <functional>
#include <set>

#include <doctest.h>

#include "datagen.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "model.hpp"
#include "oracles.hpp"

using namespace fairconf;
using fairconf::testing::LoadFixture;

namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

std::filesystem::path TempDir() {
  auto dir = std::filesystem::temp_directory_path() / "fairconf_model_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("example problem 1 validates") {
  const auto instance = LoadFixture("example1.json");
  CHECK(instance.num_participants() == 2);
  CHECK(instance.num_talks() == 1);
  CHECK(instance.num_slots() == 3);
  CHECK(instance.availability(0, 1) == doctest::Approx(0.49));
  CHECK_NOTHROW(ValidateInstance(instance));
}

TEST_CASE("interest outside [0,1] is a range violation") {
  auto instance = LoadFixture("example1.json");
  instance.interest(0, 0) = 1.2;
  CHECK(CodeOf([&] { ValidateInstance(instance); }) == ErrorCode::kRangeViolation);
}

TEST_CASE("more talks than slots is rejected") {
  SchedulingInstance instance;
  instance.participants = {"p1"};
  for (int t = 0; t < 4; ++t) instance.talks.push_back({"t" + std::to_string(t), {}});
  instance.slots = MakeSlotGrid(3, 30);
  instance.interest = Matrix(1, 4, 0.5);
  instance.availability = Matrix(1, 3, 0.5);
  CHECK(CodeOf([&] { ValidateInstance(instance); }) == ErrorCode::kTooManyTalks);
}

TEST_CASE("overlapping slots are rejected") {
  auto instance = LoadFixture("example2.json");
  instance.slots[1].start_utc_min = 30;  // starts inside slot 0
  CHECK(CodeOf([&] { ValidateInstance(instance); }) == ErrorCode::kSlotOverlap);
}

TEST_CASE("weights must be positive and sized m") {
  auto instance = LoadFixture("example3.json");
  instance.weights = {1.0};
  CHECK(CodeOf([&] { ValidateInstance(instance); }) == ErrorCode::kDimensionMismatch);
  instance.weights = {1.0, 0.0};
  CHECK(CodeOf([&] { ValidateInstance(instance); }) == ErrorCode::kRangeViolation);
}

TEST_CASE("json round-trip preserves matrices exactly") {
  const auto instance = LoadFixture("example2.json");
  const auto reparsed = InstanceFromJson(InstanceToJson(instance));
  CHECK(reparsed.interest == instance.interest);
  CHECK(reparsed.availability == instance.availability);
  CHECK(reparsed.participants == instance.participants);
  CHECK(reparsed.slots.size() == instance.slots.size());
}

TEST_CASE("malformed json is a parse error") {
  CHECK(CodeOf([&] { InstanceFromJson("{\"participants\": [unterminated"); }) ==
        ErrorCode::kParseError);
}

TEST_CASE("csv triplet round-trip and participant mismatch") {
  const auto dir = TempDir();
  const auto base = (dir / "ex2").string();
  const auto instance = LoadFixture("example2.json");
  SaveInstance(instance, base, InstanceFormat::kCsvTriplet);
  const auto loaded = LoadInstance(base, InstanceFormat::kCsvTriplet);
  CHECK(loaded.interest == instance.interest);
  CHECK(loaded.availability == instance.availability);

  // Drop a row from the availability file: m disagrees between V and A.
  const auto avail_path = base + ".availability.csv";
  auto text = ReadTextFile(avail_path);
  text = text.substr(0, text.find_last_not_of("\n"));
  text = text.substr(0, text.find_last_of('\n') + 1);
  WriteTextFile(avail_path, text);
  CHECK(CodeOf([&] { LoadInstance(base, InstanceFormat::kCsvTriplet); }) ==
        ErrorCode::kDimensionMismatch);
}

TEST_CASE("schedule round-trip is lossless and ordered by talk") {
  const auto instance = LoadFixture("example3.json");
  MultiRoundSchedule schedule;
  schedule.rounds.push_back({{{1, 2}, {0, 0}}});
  const auto text = ScheduleToJson(instance, schedule);
  const auto loaded = ScheduleFromJson(instance, text);
  REQUIRE(loaded.rounds.size() == 1);
  CHECK(loaded.rounds[0].assignment ==
        std::vector<std::pair<int, int>>{{0, 0}, {1, 2}});
}

TEST_CASE("multi-round schedule with repeated talks round-trips") {
  const auto instance = LoadFixture("example3.json");
  MultiRoundSchedule schedule;
  schedule.rounds.push_back({{{0, 0}, {1, 2}}});
  schedule.rounds.push_back({{{0, 3}}});  // talk t1 repeated in a later round
  const auto loaded = ScheduleFromJson(instance, ScheduleToJson(instance, schedule));
  REQUIRE(loaded.rounds.size() == 2);
  CHECK(loaded.rounds[1].assignment == std::vector<std::pair<int, int>>{{0, 3}});
}

TEST_CASE("unknown ids and reused slots fail on load") {
  const auto instance = LoadFixture("example3.json");
  CHECK(CodeOf([&] {
          ScheduleFromJson(instance,
                           R"({"rounds":[[{"talk":"zz","slot":"s1"}]]})");
        }) == ErrorCode::kUnknownTalkId);
  CHECK(CodeOf([&] {
          ScheduleFromJson(instance,
                           R"({"rounds":[[{"talk":"t1","slot":"s9"}]]})");
        }) == ErrorCode::kUnknownSlotId);
  CHECK(CodeOf([&] {
          ScheduleFromJson(instance, R"({"rounds":[[{"talk":"t1","slot":"s1"},
                                                    {"talk":"t2","slot":"s1"}]]})");
        }) == ErrorCode::kSlotOverlap);
}

TEST_CASE("accepted full schedules cover exactly n slots") {
  const auto instance = GenUniform(3, 4, 6, 11);
  testing::EnumerateSchedules(4, 6, [&](const std::vector<int>& assignment) {
    const Schedule schedule = testing::ScheduleFromVector(assignment);
    ValidateFullSchedule(instance, schedule);
    std::set<int> image;
    for (const auto& [t, s] : schedule.assignment) image.insert(s);
    CHECK(image.size() == 4);
  });
}
