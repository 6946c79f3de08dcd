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

#include "clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "errors.hpp"
#include "rng.hpp"

namespace fairconf {

Matrix BuildProfiles(const SchedulingInstance& instance) {
  const std::size_t m = instance.num_participants();
  const std::size_t n = instance.num_talks();
  const std::size_t l = instance.num_slots();
  Matrix profiles(m, n + l);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t t = 0; t < n; ++t) profiles(p, t) = instance.interest(p, t);
    for (std::size_t s = 0; s < l; ++s) profiles(p, n + s) = instance.availability(p, s);
  }
  return profiles;
}

namespace {

double SquaredDistance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

}  // namespace

ClusterModel KMeans(const Matrix& profiles, std::size_t k, std::uint64_t seed,
                    int max_iter) {
  const std::size_t m = profiles.rows();
  const std::size_t dim = profiles.cols();
  if (k < 1 || k > m)
    Fail(ErrorCode::kInvalidArgument, "cluster count must be in [1, m]");

  Rng rng(seed);
  Matrix centroids(k, dim);

  // k-means++ seeding.
  std::vector<std::size_t> chosen;
  std::vector<bool> is_chosen(m, false);
  {
    const std::size_t first = rng.uniform_below(m);
    chosen.push_back(first);
    is_chosen[first] = true;
    std::vector<double> dist2(m, std::numeric_limits<double>::infinity());
    while (chosen.size() < k) {
      const auto last = profiles.row(chosen.back());
      double total = 0.0;
      for (std::size_t p = 0; p < m; ++p) {
        dist2[p] = std::min(dist2[p], SquaredDistance(profiles.row(p), last));
        if (is_chosen[p]) dist2[p] = 0.0;
        total += dist2[p];
      }
      std::size_t pick = m;
      if (total > 0.0) {
        double target = rng.uniform() * total;
        for (std::size_t p = 0; p < m; ++p) {
          target -= dist2[p];
          if (target <= 0.0 && !is_chosen[p]) {
            pick = p;
            break;
          }
        }
      }
      if (pick == m) {
        // All remaining mass sits on duplicates; take the first free point.
        for (std::size_t p = 0; p < m; ++p)
          if (!is_chosen[p]) {
            pick = p;
            break;
          }
      }
      chosen.push_back(pick);
      is_chosen[pick] = true;
    }
    for (std::size_t c = 0; c < k; ++c)
      std::copy(profiles.row(chosen[c]).begin(), profiles.row(chosen[c]).end(),
                centroids.row(c).begin());
  }

  std::vector<int> assignment(m, -1);
  std::vector<int> sizes(k, 0);
  for (int iter = 0; iter < max_iter; ++iter) {
    // Assignment step, nearest centroid with lowest-index ties.
    std::vector<int> next(m, 0);
    for (std::size_t p = 0; p < m; ++p) {
      double best = std::numeric_limits<double>::infinity();
      int best_c = 0;
      for (std::size_t c = 0; c < k; ++c) {
        const double d = SquaredDistance(profiles.row(p), centroids.row(c));
        if (d < best) {
          best = d;
          best_c = static_cast<int>(c);
        }
      }
      next[p] = best_c;
    }
    std::fill(sizes.begin(), sizes.end(), 0);
    for (std::size_t p = 0; p < m; ++p) ++sizes[next[p]];

    // Repair empty clusters: steal the farthest member of the largest one.
    for (std::size_t c = 0; c < k; ++c) {
      while (sizes[c] == 0) {
        int donor = 0;
        for (std::size_t c2 = 1; c2 < k; ++c2)
          if (sizes[c2] > sizes[donor]) donor = static_cast<int>(c2);
        double worst = -1.0;
        std::size_t victim = m;
        for (std::size_t p = 0; p < m; ++p) {
          if (next[p] != donor) continue;
          const double d = SquaredDistance(profiles.row(p), centroids.row(donor));
          if (d > worst) {
            worst = d;
            victim = p;
          }
        }
        next[victim] = static_cast<int>(c);
        --sizes[donor];
        ++sizes[c];
      }
    }

    const bool stable = next == assignment;
    assignment = std::move(next);

    // Update step.
    centroids = Matrix(k, dim, 0.0);
    for (std::size_t p = 0; p < m; ++p) {
      auto row = centroids.row(assignment[p]);
      auto profile = profiles.row(p);
      for (std::size_t i = 0; i < dim; ++i) row[i] += profile[i];
    }
    for (std::size_t c = 0; c < k; ++c) {
      auto row = centroids.row(c);
      for (std::size_t i = 0; i < dim; ++i)
        row[i] = std::clamp(row[i] / sizes[c], 0.0, 1.0);
    }
    if (stable) break;
  }

  // Canonical labels: clusters ordered by their smallest member index, so a
  // k = m fit reproduces the participant order exactly.
  std::vector<int> first_member(k, std::numeric_limits<int>::max());
  for (std::size_t p = 0; p < m; ++p)
    first_member[assignment[p]] =
        std::min(first_member[assignment[p]], static_cast<int>(p));
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return first_member[a] < first_member[b]; });
  std::vector<int> relabel(k);
  for (std::size_t rank = 0; rank < k; ++rank) relabel[order[rank]] = static_cast<int>(rank);

  ClusterModel model;
  model.k = k;
  model.centroids = Matrix(k, dim);
  model.sizes.assign(k, 0);
  model.assignment.resize(m);
  for (std::size_t c = 0; c < k; ++c)
    std::copy(centroids.row(c).begin(), centroids.row(c).end(),
              model.centroids.row(relabel[c]).begin());
  for (std::size_t p = 0; p < m; ++p) {
    model.assignment[p] = relabel[assignment[p]];
    ++model.sizes[model.assignment[p]];
  }
  return model;
}

SchedulingInstance ClusteredInstance(const SchedulingInstance& instance,
                                     const ClusterModel& model) {
  const std::size_t n = instance.num_talks();
  const std::size_t l = instance.num_slots();
  if (model.assignment.size() != instance.num_participants() ||
      model.centroids.cols() != n + l)
    Fail(ErrorCode::kDimensionMismatch, "cluster model does not match the instance");
  if (!instance.weights.empty())
    Fail(ErrorCode::kInvalidArgument, "refusing to cluster an already-weighted instance");

  SchedulingInstance reduced;
  for (std::size_t c = 0; c < model.k; ++c)
    reduced.participants.push_back("c" + std::to_string(c + 1));
  reduced.talks = instance.talks;
  reduced.slots = instance.slots;
  reduced.interest = Matrix(model.k, n);
  reduced.availability = Matrix(model.k, l);
  for (std::size_t c = 0; c < model.k; ++c) {
    for (std::size_t t = 0; t < n; ++t) reduced.interest(c, t) = model.centroids(c, t);
    for (std::size_t s = 0; s < l; ++s)
      reduced.availability(c, s) = model.centroids(c, n + s);
    reduced.weights.push_back(static_cast<double>(model.sizes[c]));
  }
  ValidateInstance(reduced);
  return reduced;
}

std::string ClusterModelToJson(const SchedulingInstance& instance,
                               const ClusterModel& model) {
  nlohmann::json doc;
  doc["k"] = model.k;
  doc["sizes"] = model.sizes;
  nlohmann::json assignment = nlohmann::json::object();
  for (std::size_t p = 0; p < model.assignment.size(); ++p)
    assignment[instance.participants[p]] = model.assignment[p];
  doc["assignment"] = std::move(assignment);
  nlohmann::json centroids = nlohmann::json::array();
  for (std::size_t c = 0; c < model.k; ++c) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t i = 0; i < model.centroids.cols(); ++i)
      row.push_back(model.centroids(c, i));
    centroids.push_back(std::move(row));
  }
  doc["centroids"] = std::move(centroids);
  return doc.dump(2) + "\n";
}

}  // namespace fairconf
