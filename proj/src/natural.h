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

// The k-natural matroid of a k-polymatroid. Each element e is replaced by k
// clones e1..ek; the rank of a clone set depends only on how many clones of
// each element it holds, so everything is computed on the count grid
// [0,k]^E through the multiset rank R.

#ifndef PMKIT_NATURAL_H_
#define PMKIT_NATURAL_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rank_table.h"

namespace pmkit {

// Per-element clone counts, in ground order.
using CountVector = std::vector<int64_t>;

struct CloneElement {
  std::string base;
  int64_t index = 1;  // 1..k

  bool operator==(const CloneElement&) const = default;
  auto operator<=>(const CloneElement&) const = default;
};

// Counts of each base element among `clones`. Throws kUnknownElement,
// kInvalidArgument for an index outside [1,k] or a repeated clone.
CountVector partition_map(const RankTable& rho, std::span<const CloneElement> clones);

// min over B of rho(B) + sum_{e not in B} a_e. Throws kOutOfGrid.
int64_t multiset_rank(const RankTable& rho, std::span<const int64_t> a);

// max sum(b) over lattice points b of I_rho with b <= a.
int64_t multiset_rank_oracle(const RankTable& rho, std::span<const int64_t> a);

// Throws kOutOfGrid unless a has one entry per element, each in [0,k].
void check_in_grid(const RankTable& rho, std::span<const int64_t> a);

// Memoized R over [0,k]^E. Entries are filled on demand; fill() computes the
// rest. Concurrent readers are safe: each entry is a pure function of rho and
// is published with a single atomic store.
class MultisetRankGrid {
 public:
  explicit MultisetRankGrid(RankTable rho);

  const RankTable& polymatroid() const { return rho_; }
  int64_t k() const { return rho_.k(); }
  size_t point_count() const { return count_; }

  // Throws kOutOfGrid.
  int64_t at(std::span<const int64_t> a) const;
  int64_t at_index(size_t index) const;

  size_t index_of(std::span<const int64_t> a) const;
  CountVector point(size_t index) const;

  void fill() const;

  // Header "<labels...>,rank", then one row per point in lexicographic order.
  std::string to_csv() const;

 private:
  RankTable rho_;
  size_t count_;
  std::vector<size_t> stride_;
  std::unique_ptr<std::atomic<int64_t>[]> values_;
};

// Rank of a clone set in the k-natural matroid.
int64_t natural_rank(const RankTable& rho, std::span<const CloneElement> clones);

// R(c + y) - R(c). Throws kOutOfGrid.
int64_t minor_multiset_rank(const MultisetRankGrid& grid, std::span<const int64_t> c,
                            std::span<const int64_t> y);

// Explicit k-natural matroid on labels e1..ek, f1..fk, ... (clone i of
// element j sits at bit j*k + i - 1), computed from the set formula
// min over A of rho(A) + |X - X_A|. Throws kTooLarge if k|E| > 16.
RankTable explicit_natural_matroid(const RankTable& rho);

// Checks on the explicit natural matroid that rank depends only on the clone
// counts and agrees with the multiset rank. Throws kTooLarge if k|E| > 16.
bool clone_check(const RankTable& rho);

}  // namespace pmkit

#endif  // PMKIT_NATURAL_H_
