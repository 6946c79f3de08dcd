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

#ifndef FAIRCONF_HUNGARIAN_HPP_
#define FAIRCONF_HUNGARIAN_HPP_

#include <vector>

#include "matrix.hpp"

namespace fairconf {

// Minimum-cost perfect matching on a square cost matrix, O(n^3) potentials
// method. Returns the column matched to each row; `total_cost` (optional)
// receives the matching cost.
std::vector<int> HungarianMinCost(const Matrix& cost, double* total_cost = nullptr);

}  // namespace fairconf

#endif  // FAIRCONF_HUNGARIAN_HPP_
