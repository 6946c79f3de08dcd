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

#ifndef FAIRCONF_JSON_IO_HPP_
#define FAIRCONF_JSON_IO_HPP_

#include <string>

#include "model.hpp"

namespace fairconf {

enum class InstanceFormat { kJson, kCsvTriplet };

InstanceFormat ParseInstanceFormat(const std::string& name);

// JSON is the canonical instance format:
//   {"participants":[{"id":...}], "talks":[{"id":...,"priority":...?}],
//    "slots":[{"id":...,"start_utc_min":...,"duration_min":...}],
//    "interest":[[...]], "availability":[[...]], "weights":[...]?}
std::string InstanceToJson(const SchedulingInstance& instance);
SchedulingInstance InstanceFromJson(const std::string& text);

// The CSV triplet exists for spreadsheet-authored instances. `base` names
// three sibling files: <base>.slots.csv, <base>.interest.csv,
// <base>.availability.csv. Interest/availability files carry a header row of
// talk/slot ids and one row per participant (first column: participant id).
SchedulingInstance LoadInstance(const std::string& path, InstanceFormat format);
void SaveInstance(const SchedulingInstance& instance, const std::string& path,
                  InstanceFormat format);

// Schedules serialize as {"rounds":[[{"talk":id,"slot":id}]]}; a plain
// schedule is a one-round file. Pairs are ordered by talk index for stable
// round-trips.
std::string ScheduleToJson(const SchedulingInstance& instance,
                           const MultiRoundSchedule& schedule);
MultiRoundSchedule ScheduleFromJson(const SchedulingInstance& instance,
                                    const std::string& text);

void SaveSchedule(const SchedulingInstance& instance, const MultiRoundSchedule& schedule,
                  const std::string& path);
MultiRoundSchedule LoadSchedule(const SchedulingInstance& instance,
                                const std::string& path);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& content);

}  // namespace fairconf

#endif  // FAIRCONF_JSON_IO_HPP_
