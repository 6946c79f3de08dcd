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

#ifndef FAIRCONF_CLUSTERING_HPP_
#define FAIRCONF_CLUSTERING_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "model.hpp"

namespace fairconf {

struct ClusterModel {
  std::size_t k = 0;
  Matrix centroids;             // k x (n + l)
  std::vector<int> assignment;  // participant -> cluster
  std::vector<int> sizes;       // per cluster, sums to m
};

// Row p is the participant's interest row concatenated with their
// availability row.
Matrix BuildProfiles(const SchedulingInstance& instance);

// k-means++ seeding followed by Lloyd's iterations. Deterministic for a
// fixed seed: ties break on the lowest index, empty clusters are repaired by
// moving the farthest point out of the largest cluster, and final cluster
// labels are ordered by their smallest member.
ClusterModel KMeans(const Matrix& profiles, std::size_t k, std::uint64_t seed,
                    int max_iter = 100);

// Reduced instance whose "participants" are the centroids, weighted by
// cluster size. The weights feed the efficiency and speaker terms only; the
// per-centroid NCG fairness rows stay unweighted by construction of the LP.
SchedulingInstance ClusteredInstance(const SchedulingInstance& instance,
                                     const ClusterModel& model);

std::string ClusterModelToJson(const SchedulingInstance& instance,
                               const ClusterModel& model);

}  // namespace fairconf

#endif  // FAIRCONF_CLUSTERING_HPP_
