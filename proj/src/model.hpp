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

#ifndef FAIRCONF_MODEL_HPP_
#define FAIRCONF_MODEL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace fairconf {

struct Talk {
  std::string id;
  std::optional<int> priority;
};

// Slot times are integer minutes (UTC, from midnight of day 0) so that
// contiguity and gap computations stay exact.
struct Slot {
  std::string id;
  std::int64_t start_utc_min = 0;
  std::int64_t duration_min = 0;
};

// A conference instance: m participants, n talks, l slots, an m-by-n interest
// matrix and an m-by-l availability matrix, both with entries in [0,1].
// Instances are validated once (Validate) and treated as immutable afterwards;
// all math works on dense indices, the string ids are only used at the file
// boundary.
struct SchedulingInstance {
  std::vector<std::string> participants;
  std::vector<Talk> talks;
  std::vector<Slot> slots;
  Matrix interest;      // m x n
  Matrix availability;  // m x l
  std::vector<double> weights;  // size m; all 1 unless the instance is clustered

  std::size_t num_participants() const { return participants.size(); }
  std::size_t num_talks() const { return talks.size(); }
  std::size_t num_slots() const { return slots.size(); }

  double weight(std::size_t p) const { return weights.empty() ? 1.0 : weights[p]; }
  double total_weight() const;

  int talk_index(const std::string& id) const;  // -1 if unknown
  int slot_index(const std::string& id) const;
};

// One scheduling round: an injective map from a subset of talks to slots,
// stored as (talk index, slot index) pairs ordered by talk index.
struct Schedule {
  std::vector<std::pair<int, int>> assignment;

  std::size_t size() const { return assignment.size(); }
  // Dense talk->slot lookup (-1 for unscheduled talks).
  std::vector<int> slot_of_talk(std::size_t num_talks) const;
};

// Ordered rounds over disjoint slot sets. A talk may appear in several rounds
// (a repetition); within one round each talk appears at most once.
struct MultiRoundSchedule {
  std::vector<Schedule> rounds;

  static MultiRoundSchedule single(Schedule round);
  bool is_single_round() const { return rounds.size() == 1; }
  std::size_t total_assignments() const;
};

// Throws Error with the matching code (DimensionMismatch, RangeViolation,
// SlotOverlap, TooManyTalks) when an invariant fails. Returns the instance
// unchanged otherwise.
const SchedulingInstance& ValidateInstance(const SchedulingInstance& instance);

// Checks that `schedule` is a valid full single round for `instance`: every
// talk exactly once, no slot reused.
void ValidateFullSchedule(const SchedulingInstance& instance, const Schedule& schedule);

// Checks round-level invariants of a multi-round schedule against an instance:
// indices in range, talks unique within a round, slots unique across rounds.
void ValidateMultiRound(const SchedulingInstance& instance,
                        const MultiRoundSchedule& schedule);

}  // namespace fairconf

#endif  // FAIRCONF_MODEL_HPP_
