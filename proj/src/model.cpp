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

#include "model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace fairconf {

double SchedulingInstance::total_weight() const {
  if (weights.empty()) return static_cast<double>(num_participants());
  double sum = 0.0;
  for (double w : weights) sum += w;
  return sum;
}

int SchedulingInstance::talk_index(const std::string& id) const {
  for (std::size_t t = 0; t < talks.size(); ++t)
    if (talks[t].id == id) return static_cast<int>(t);
  return -1;
}

int SchedulingInstance::slot_index(const std::string& id) const {
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (slots[s].id == id) return static_cast<int>(s);
  return -1;
}

std::vector<int> Schedule::slot_of_talk(std::size_t num_talks) const {
  std::vector<int> out(num_talks, -1);
  for (const auto& [t, s] : assignment) out[static_cast<std::size_t>(t)] = s;
  return out;
}

MultiRoundSchedule MultiRoundSchedule::single(Schedule round) {
  MultiRoundSchedule out;
  out.rounds.push_back(std::move(round));
  return out;
}

std::size_t MultiRoundSchedule::total_assignments() const {
  std::size_t total = 0;
  for (const auto& round : rounds) total += round.size();
  return total;
}

namespace {

void CheckMatrixRange(const Matrix& matrix, const char* name) {
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      const double v = matrix(r, c);
      if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream msg;
        msg << name << "[" << r << "][" << c << "] = " << v << " is outside [0,1]";
        Fail(ErrorCode::kRangeViolation, msg.str());
      }
    }
  }
}

}  // namespace

const SchedulingInstance& ValidateInstance(const SchedulingInstance& instance) {
  const std::size_t m = instance.num_participants();
  const std::size_t n = instance.num_talks();
  const std::size_t l = instance.num_slots();

  if (m == 0 || n == 0 || l == 0)
    Fail(ErrorCode::kInvalidDims, "instance needs at least one participant, talk and slot");
  if (n > l) {
    std::ostringstream msg;
    msg << "cannot schedule " << n << " talks one-to-one into " << l << " slots";
    Fail(ErrorCode::kTooManyTalks, msg.str());
  }
  if (instance.interest.rows() != m || instance.interest.cols() != n) {
    std::ostringstream msg;
    msg << "interest matrix is " << instance.interest.rows() << "x"
        << instance.interest.cols() << ", expected " << m << "x" << n;
    Fail(ErrorCode::kDimensionMismatch, msg.str());
  }
  if (instance.availability.rows() != m || instance.availability.cols() != l) {
    std::ostringstream msg;
    msg << "availability matrix is " << instance.availability.rows() << "x"
        << instance.availability.cols() << ", expected " << m << "x" << l;
    Fail(ErrorCode::kDimensionMismatch, msg.str());
  }
  CheckMatrixRange(instance.interest, "interest");
  CheckMatrixRange(instance.availability, "availability");

  for (std::size_t s = 0; s < l; ++s) {
    if (instance.slots[s].duration_min <= 0)
      Fail(ErrorCode::kSlotOverlap, "slot '" + instance.slots[s].id +
                                        "' has non-positive duration");
    if (s > 0) {
      const Slot& prev = instance.slots[s - 1];
      const Slot& cur = instance.slots[s];
      if (cur.start_utc_min < prev.start_utc_min + prev.duration_min) {
        std::ostringstream msg;
        msg << "slots '" << prev.id << "' and '" << cur.id
            << "' overlap or are out of chronological order";
        Fail(ErrorCode::kSlotOverlap, msg.str());
      }
    }
  }

  if (!instance.weights.empty()) {
    if (instance.weights.size() != m)
      Fail(ErrorCode::kDimensionMismatch, "weights length does not match participant count");
    for (double w : instance.weights)
      if (!(w > 0.0))
        Fail(ErrorCode::kRangeViolation, "participant weights must be strictly positive");
  }

  // Ids must be unique so that schedule files resolve unambiguously.
  auto check_unique = [](auto begin, auto end, const char* kind) {
    std::set<std::string> seen;
    for (auto it = begin; it != end; ++it)
      if (!seen.insert(*it).second)
        Fail(ErrorCode::kParseError, std::string("duplicate ") + kind + " id '" + *it + "'");
  };
  check_unique(instance.participants.begin(), instance.participants.end(), "participant");
  std::vector<std::string> talk_ids, slot_ids;
  for (const auto& t : instance.talks) talk_ids.push_back(t.id);
  for (const auto& s : instance.slots) slot_ids.push_back(s.id);
  check_unique(talk_ids.begin(), talk_ids.end(), "talk");
  check_unique(slot_ids.begin(), slot_ids.end(), "slot");

  return instance;
}

void ValidateFullSchedule(const SchedulingInstance& instance, const Schedule& schedule) {
  const std::size_t n = instance.num_talks();
  const std::size_t l = instance.num_slots();
  if (schedule.size() != n)
    Fail(ErrorCode::kUnknownTalkId, "schedule must assign every talk exactly once");
  std::vector<bool> talk_seen(n, false), slot_seen(l, false);
  for (const auto& [t, s] : schedule.assignment) {
    if (t < 0 || static_cast<std::size_t>(t) >= n)
      Fail(ErrorCode::kUnknownTalkId, "talk index out of range");
    if (s < 0 || static_cast<std::size_t>(s) >= l)
      Fail(ErrorCode::kUnknownSlotId, "slot index out of range");
    if (talk_seen[t]) Fail(ErrorCode::kUnknownTalkId, "talk assigned twice");
    if (slot_seen[s]) Fail(ErrorCode::kSlotOverlap, "slot used twice");
    talk_seen[t] = true;
    slot_seen[s] = true;
  }
}

void ValidateMultiRound(const SchedulingInstance& instance,
                        const MultiRoundSchedule& schedule) {
  const std::size_t n = instance.num_talks();
  const std::size_t l = instance.num_slots();
  std::vector<bool> slot_seen(l, false);
  for (const auto& round : schedule.rounds) {
    std::vector<bool> talk_seen(n, false);
    for (const auto& [t, s] : round.assignment) {
      if (t < 0 || static_cast<std::size_t>(t) >= n)
        Fail(ErrorCode::kUnknownTalkId, "talk index out of range");
      if (s < 0 || static_cast<std::size_t>(s) >= l)
        Fail(ErrorCode::kUnknownSlotId, "slot index out of range");
      if (talk_seen[t])
        Fail(ErrorCode::kUnknownTalkId, "talk appears twice within one round");
      if (slot_seen[s]) Fail(ErrorCode::kSlotOverlap, "slot reused across rounds");
      talk_seen[t] = true;
      slot_seen[s] = true;
    }
  }
}

}  // namespace fairconf
