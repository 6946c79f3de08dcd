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

#ifndef FAIRCONF_DATAGEN_HPP_
#define FAIRCONF_DATAGEN_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "model.hpp"

namespace fairconf {

// Evenly spaced slot grid: `count` slots of `duration_min` minutes starting
// at `start_utc_min`.
std::vector<Slot> MakeSlotGrid(std::size_t count, std::int64_t duration_min,
                               std::int64_t start_utc_min = 0);

// Interest and availability i.i.d. Uniform[0,1].
SchedulingInstance GenUniform(std::size_t m, std::size_t n, std::size_t l,
                              std::uint64_t seed);

// Binary 9-to-5 availability: row p has a 1 exactly where the slot's start,
// shifted by that participant's UTC offset (minutes), lands in [09:00, 17:00)
// local time. The grid must cover whole days so the window wraps cleanly.
Matrix GenTimezoneAvailability(const std::vector<int>& offsets_min,
                               const std::vector<Slot>& slots);

// V_p(t) ~ Bernoulli(popularity_t / max popularity).
Matrix GenInterestBernoulli(const std::vector<double>& popularity, std::size_t m,
                            std::uint64_t seed);

// V_p(t) ~ Normal(mean = popularity ratio, std = mean/4), clipped into [0,1].
Matrix GenInterestNormal(const std::vector<double>& popularity, std::size_t m,
                         std::uint64_t seed);

// Adversarial instance from a number-partition multiset: two participants
// with identical interests g_i/sum(G), split availability (first n slots vs
// last n slots). A perfectly participant-fair schedule exists iff G has an
// equal-sum bipartition.
SchedulingInstance GenPartitionInstance(const std::vector<std::int64_t>& group);

// FATREC-shaped preset: 40 participants in three timezone groups, 11 talks
// with Zipf popularity, Normal interests, 96 fifteen-minute slots.
SchedulingInstance GenPresetFatrec(std::uint64_t seed);

// RECSYS-shaped preset: 1112 participants over global timezone groups, 26
// talks with Zipf popularity, Bernoulli interests, 48 half-hour slots.
SchedulingInstance GenPresetRecsys(std::uint64_t seed);

// Named preset lookup ("fatrec" | "recsys").
SchedulingInstance GenPreset(const std::string& name, std::uint64_t seed);

}  // namespace fairconf

#endif  // FAIRCONF_DATAGEN_HPP_
