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

#include "datagen.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "rng.hpp"

namespace fairconf {

namespace {

constexpr std::int64_t kMinutesPerDay = 1440;
constexpr std::int64_t kWorkdayStartMin = 9 * 60;
constexpr std::int64_t kWorkdayEndMin = 17 * 60;

std::vector<std::string> NumberedIds(const char* prefix, std::size_t count) {
  std::vector<std::string> ids;
  ids.reserve(count);
  for (std::size_t i = 0; i < count; ++i) ids.push_back(prefix + std::to_string(i + 1));
  return ids;
}

std::vector<Talk> NumberedTalks(std::size_t count) {
  std::vector<Talk> talks;
  for (auto& id : NumberedIds("t", count)) talks.push_back({std::move(id), std::nullopt});
  return talks;
}

double PopularityRatio(const std::vector<double>& popularity, std::size_t t, double max_pop) {
  return popularity[t] / max_pop;
}

double MaxPopularity(const std::vector<double>& popularity) {
  if (popularity.empty())
    Fail(ErrorCode::kInvalidArgument, "popularity vector must be non-empty");
  double max_pop = 0.0;
  for (double p : popularity) {
    if (p < 0.0) Fail(ErrorCode::kInvalidArgument, "popularity must be non-negative");
    max_pop = std::max(max_pop, p);
  }
  if (max_pop <= 0.0)
    Fail(ErrorCode::kInvalidArgument, "popularity must contain a positive value");
  return max_pop;
}

// Citation-count stand-in: Zipf weights 1/(rank+1).
std::vector<double> ZipfPopularity(std::size_t n) {
  std::vector<double> popularity(n);
  for (std::size_t i = 0; i < n; ++i) popularity[i] = 1.0 / static_cast<double>(i + 1);
  return popularity;
}

}  // namespace

std::vector<Slot> MakeSlotGrid(std::size_t count, std::int64_t duration_min,
                               std::int64_t start_utc_min) {
  if (count == 0 || duration_min <= 0)
    Fail(ErrorCode::kInvalidDims, "slot grid needs a positive count and duration");
  std::vector<Slot> slots;
  slots.reserve(count);
  auto ids = NumberedIds("s", count);
  for (std::size_t i = 0; i < count; ++i)
    slots.push_back({std::move(ids[i]),
                     start_utc_min + static_cast<std::int64_t>(i) * duration_min,
                     duration_min});
  return slots;
}

SchedulingInstance GenUniform(std::size_t m, std::size_t n, std::size_t l,
                              std::uint64_t seed) {
  if (m == 0 || n == 0 || l == 0 || n > l)
    Fail(ErrorCode::kInvalidDims, "uniform generator needs m,n,l >= 1 and n <= l");
  Rng rng(seed);
  SchedulingInstance instance;
  instance.participants = NumberedIds("p", m);
  instance.talks = NumberedTalks(n);
  instance.slots = MakeSlotGrid(l, 60);
  instance.interest = Matrix(m, n);
  instance.availability = Matrix(m, l);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t t = 0; t < n; ++t) instance.interest(p, t) = rng.uniform();
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t s = 0; s < l; ++s) instance.availability(p, s) = rng.uniform();
  return instance;
}

Matrix GenTimezoneAvailability(const std::vector<int>& offsets_min,
                               const std::vector<Slot>& slots) {
  if (offsets_min.empty() || slots.empty())
    Fail(ErrorCode::kInvalidDims, "timezone availability needs offsets and slots");
  // Whole-day coverage keeps the 9-to-5 window consistent across wrap-around.
  std::int64_t span = 0;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    span += slots[s].duration_min;
    if (s > 0 && slots[s].start_utc_min != slots[s - 1].start_utc_min + slots[s - 1].duration_min)
      Fail(ErrorCode::kInvalidDims, "timezone availability needs a contiguous slot grid");
  }
  if (span % kMinutesPerDay != 0)
    Fail(ErrorCode::kInvalidDims, "slot grid must cover a whole number of days");

  Matrix availability(offsets_min.size(), slots.size());
  for (std::size_t p = 0; p < offsets_min.size(); ++p) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      std::int64_t local =
          (slots[s].start_utc_min + offsets_min[p]) % kMinutesPerDay;
      if (local < 0) local += kMinutesPerDay;
      availability(p, s) =
          (local >= kWorkdayStartMin && local < kWorkdayEndMin) ? 1.0 : 0.0;
    }
  }
  return availability;
}

Matrix GenInterestBernoulli(const std::vector<double>& popularity, std::size_t m,
                            std::uint64_t seed) {
  const double max_pop = MaxPopularity(popularity);
  Rng rng(seed);
  Matrix interest(m, popularity.size());
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t t = 0; t < popularity.size(); ++t)
      interest(p, t) = rng.bernoulli(PopularityRatio(popularity, t, max_pop)) ? 1.0 : 0.0;
  return interest;
}

Matrix GenInterestNormal(const std::vector<double>& popularity, std::size_t m,
                         std::uint64_t seed) {
  const double max_pop = MaxPopularity(popularity);
  Rng rng(seed);
  Matrix interest(m, popularity.size());
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t t = 0; t < popularity.size(); ++t) {
      const double mean = PopularityRatio(popularity, t, max_pop);
      const double draw = mean + (mean / 4.0) * rng.normal();
      interest(p, t) = std::clamp(draw, 0.0, 1.0);
    }
  }
  return interest;
}

SchedulingInstance GenPartitionInstance(const std::vector<std::int64_t>& group) {
  if (group.empty())
    Fail(ErrorCode::kInvalidArgument, "partition multiset must be non-empty");
  std::int64_t sum = 0;
  for (std::int64_t g : group) {
    if (g <= 0) Fail(ErrorCode::kInvalidArgument, "partition numbers must be positive");
    sum += g;
  }
  const std::size_t n = group.size();
  SchedulingInstance instance;
  instance.participants = NumberedIds("p", 2);
  instance.talks = NumberedTalks(n);
  instance.slots = MakeSlotGrid(2 * n, 60);
  instance.interest = Matrix(2, n);
  instance.availability = Matrix(2, 2 * n);
  for (std::size_t t = 0; t < n; ++t) {
    const double v = static_cast<double>(group[t]) / static_cast<double>(sum);
    instance.interest(0, t) = v;
    instance.interest(1, t) = v;
  }
  for (std::size_t s = 0; s < 2 * n; ++s) {
    instance.availability(0, s) = s < n ? 1.0 : 0.0;
    instance.availability(1, s) = s < n ? 0.0 : 1.0;
  }
  return instance;
}

SchedulingInstance GenPresetFatrec(std::uint64_t seed) {
  // 16 US-East, 16 central-Europe, 8 India participants.
  std::vector<int> offsets;
  for (int i = 0; i < 16; ++i) offsets.push_back(-300);
  for (int i = 0; i < 16; ++i) offsets.push_back(120);
  for (int i = 0; i < 8; ++i) offsets.push_back(330);

  SchedulingInstance instance;
  instance.participants = NumberedIds("p", offsets.size());
  instance.talks = NumberedTalks(11);
  instance.slots = MakeSlotGrid(96, 15);
  instance.availability = GenTimezoneAvailability(offsets, instance.slots);
  instance.interest = GenInterestNormal(ZipfPopularity(11), offsets.size(), seed);
  return instance;
}

SchedulingInstance GenPresetRecsys(std::uint64_t seed) {
  struct Group {
    int count;
    int offset_min;
  };
  // Rough global mix used by the preset; counts sum to 1112.
  const Group groups[] = {{420, 120},  {260, -240}, {140, -420}, {120, 330},
                          {90, 480},   {40, 540},   {30, 600},   {12, -180}};
  std::vector<int> offsets;
  for (const Group& g : groups)
    for (int i = 0; i < g.count; ++i) offsets.push_back(g.offset_min);

  SchedulingInstance instance;
  instance.participants = NumberedIds("p", offsets.size());
  instance.talks = NumberedTalks(26);
  instance.slots = MakeSlotGrid(48, 30);
  instance.availability = GenTimezoneAvailability(offsets, instance.slots);
  instance.interest = GenInterestBernoulli(ZipfPopularity(26), offsets.size(), seed);
  return instance;
}

SchedulingInstance GenPreset(const std::string& name, std::uint64_t seed) {
  if (name == "fatrec") return GenPresetFatrec(seed);
  if (name == "recsys") return GenPresetRecsys(seed);
  Fail(ErrorCode::kInvalidArgument, "unknown preset '" + name + "'");
}

}  // namespace fairconf
