// Copyright 2026 The Authors.
//
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

#ifndef PMKIT_ENUMERATE_H_
#define PMKIT_ENUMERATE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "rank_table.h"

namespace pmkit {

struct EnumerationStats {
  uint64_t nodes = 0;   // partial assignments visited
  uint64_t tables = 0;  // complete tables emitted
};

// Calls `visit` on every k-polymatroid on GroundSet::standard(n), in
// lexicographic order of the rank vector (indexed by bitmask). Ranks are
// assigned subset by subset in increasing bitmask order; each value is
// confined to the interval allowed by monotonicity and by submodularity
// against already-assigned subsets, so every leaf is valid and nothing is
// post-filtered.
//
// `first_singleton`, when set, pins the rank of element 0 (used to split the
// search across workers). Throws Error(kSearchBudgetExceeded) once more than
// `budget` nodes have been visited.
EnumerationStats for_each_polymatroid(int n, int64_t k,
                                      const std::function<void(const RankTable&)>& visit,
                                      uint64_t budget = UINT64_MAX,
                                      std::optional<int64_t> first_singleton = std::nullopt);

// Number of k-polymatroids on n labeled elements.
uint64_t count_polymatroids(int n, int64_t k);

// Random valid k-polymatroid on n elements: a random descent through the
// generator's intervals. Deterministic given the engine state.
RankTable random_polymatroid(int n, int64_t k, std::mt19937_64& rng);

}  // namespace pmkit

#endif  // PMKIT_ENUMERATE_H_
