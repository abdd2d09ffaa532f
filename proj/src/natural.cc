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

#include "natural.h"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "polytope.h"

namespace pmkit {
namespace {

constexpr int kMaxExpandedElements = 16;

void check_expandable(const RankTable& rho) {
  if (rho.k() * rho.size() > kMaxExpandedElements) {
    throw Error(ErrorCode::kTooLarge,
                "natural matroid would have " + std::to_string(rho.k() * rho.size()) +
                    " elements; at most " + std::to_string(kMaxExpandedElements) +
                    " can be expanded",
                {{"k", rho.k()}, {"size", rho.size()}});
  }
}

}  // namespace

void check_in_grid(const RankTable& rho, std::span<const int64_t> a) {
  if (a.size() != static_cast<size_t>(rho.size())) {
    throw Error(ErrorCode::kOutOfGrid,
                "count vector has " + std::to_string(a.size()) + " entries, expected " +
                    std::to_string(rho.size()),
                {{"counts", std::vector<int64_t>(a.begin(), a.end())}});
  }
  for (int64_t v : a) {
    if (v < 0 || v > rho.k()) {
      throw Error(ErrorCode::kOutOfGrid,
                  "count " + std::to_string(v) + " outside [0, " + std::to_string(rho.k()) +
                      "]",
                  {{"counts", std::vector<int64_t>(a.begin(), a.end())}, {"k", rho.k()}});
    }
  }
}

CountVector partition_map(const RankTable& rho, std::span<const CloneElement> clones) {
  CountVector counts(static_cast<size_t>(rho.size()), 0);
  std::set<CloneElement> seen;
  for (const auto& c : clones) {
    const int e = rho.ground().index_of(c.base);
    if (c.index < 1 || c.index > rho.k()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "clone index " + std::to_string(c.index) + " outside [1, k]",
                  {{"base", c.base}, {"index", c.index}});
    }
    if (!seen.insert(c).second) {
      throw Error(ErrorCode::kInvalidArgument, "repeated clone",
                  {{"base", c.base}, {"index", c.index}});
    }
    ++counts[static_cast<size_t>(e)];
  }
  return counts;
}

int64_t multiset_rank(const RankTable& rho, std::span<const int64_t> a) {
  check_in_grid(rho, a);
  int64_t best = std::numeric_limits<int64_t>::max();
  const uint32_t full = rho.full().bits();
  for (uint32_t b = 0; b <= full; ++b) {
    int64_t v = rho.rank(Subset(b));
    for (int e : (Subset(full) - Subset(b)).members()) v += a[static_cast<size_t>(e)];
    best = std::min(best, v);
  }
  return best;
}

int64_t multiset_rank_oracle(const RankTable& rho, std::span<const int64_t> a) {
  check_in_grid(rho, a);
  int64_t best = 0;
  for (const auto& b : lattice_points(rho, false)) {
    bool dominated = true;
    int64_t sum = 0;
    for (size_t i = 0; i < b.size(); ++i) {
      dominated = dominated && b[i] <= a[i];
      sum += b[i];
    }
    if (dominated) best = std::max(best, sum);
  }
  return best;
}

MultisetRankGrid::MultisetRankGrid(RankTable rho) : rho_(std::move(rho)) {
  const size_t n = static_cast<size_t>(rho_.size());
  const size_t side = static_cast<size_t>(rho_.k()) + 1;
  stride_.assign(n, 1);
  count_ = 1;
  for (size_t i = n; i-- > 0;) {
    stride_[i] = count_;
    count_ *= side;
  }
  values_ = std::make_unique<std::atomic<int64_t>[]>(count_);
  for (size_t i = 0; i < count_; ++i) values_[i].store(-1, std::memory_order_relaxed);
}

size_t MultisetRankGrid::index_of(std::span<const int64_t> a) const {
  check_in_grid(rho_, a);
  size_t idx = 0;
  for (size_t i = 0; i < a.size(); ++i) idx += static_cast<size_t>(a[i]) * stride_[i];
  return idx;
}

CountVector MultisetRankGrid::point(size_t index) const {
  CountVector a(stride_.size());
  for (size_t i = 0; i < stride_.size(); ++i) {
    a[i] = static_cast<int64_t>(index / stride_[i]);
    index %= stride_[i];
  }
  return a;
}

int64_t MultisetRankGrid::at_index(size_t index) const {
  int64_t v = values_[index].load(std::memory_order_acquire);
  if (v < 0) {
    v = multiset_rank(rho_, point(index));
    values_[index].store(v, std::memory_order_release);
  }
  return v;
}

int64_t MultisetRankGrid::at(std::span<const int64_t> a) const { return at_index(index_of(a)); }

void MultisetRankGrid::fill() const {
  for (size_t i = 0; i < count_; ++i) at_index(i);
}

std::string MultisetRankGrid::to_csv() const {
  std::ostringstream out;
  for (const auto& l : rho_.ground().labels()) out << l << ',';
  out << "rank\n";
  for (size_t i = 0; i < count_; ++i) {
    for (int64_t v : point(i)) out << v << ',';
    out << at_index(i) << '\n';
  }
  return out.str();
}

int64_t natural_rank(const RankTable& rho, std::span<const CloneElement> clones) {
  return multiset_rank(rho, partition_map(rho, clones));
}

int64_t minor_multiset_rank(const MultisetRankGrid& grid, std::span<const int64_t> c,
                            std::span<const int64_t> y) {
  check_in_grid(grid.polymatroid(), c);
  if (y.size() != c.size()) {
    throw Error(ErrorCode::kOutOfGrid, "count vectors differ in length");
  }
  CountVector sum(c.begin(), c.end());
  for (size_t i = 0; i < y.size(); ++i) sum[i] += y[i];
  return grid.at(sum) - grid.at(c);
}

RankTable explicit_natural_matroid(const RankTable& rho) {
  check_expandable(rho);
  const int n = rho.size();
  const int k = static_cast<int>(rho.k());
  std::vector<std::string> labels;
  for (int e = 0; e < n; ++e) {
    for (int i = 1; i <= k; ++i) labels.push_back(rho.ground().label(e) + std::to_string(i));
  }
  GroundSet ground(std::move(labels));
  const uint32_t block = (uint32_t{1} << k) - 1;
  std::vector<int64_t> ranks(ground.subset_count());
  for (uint32_t x = 0; x < ranks.size(); ++x) {
    int64_t best = std::numeric_limits<int64_t>::max();
    for (uint32_t a = 0; a < rho.ground().subset_count(); ++a) {
      uint32_t clones_of_a = 0;
      for (int e : Subset(a).members()) clones_of_a |= block << (e * k);
      best = std::min<int64_t>(best, rho.rank(Subset(a)) + std::popcount(x & ~clones_of_a));
    }
    ranks[x] = best;
  }
  return RankTable::validate(std::move(ground), 1, std::move(ranks));
}

bool clone_check(const RankTable& rho) {
  const RankTable m = explicit_natural_matroid(rho);
  const int k = static_cast<int>(rho.k());
  const uint32_t block = (uint32_t{1} << k) - 1;
  for (uint32_t x = 0; x < m.ground().subset_count(); ++x) {
    CountVector counts(static_cast<size_t>(rho.size()));
    for (int e = 0; e < rho.size(); ++e) counts[static_cast<size_t>(e)] = std::popcount((x >> (e * k)) & block);
    if (m.rank(Subset(x)) != multiset_rank(rho, counts)) return false;
  }
  return true;
}

}  // namespace pmkit
