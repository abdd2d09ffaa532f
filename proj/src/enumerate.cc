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

#include "enumerate.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <utility>
#include <vector>

namespace pmkit {
namespace {

// For each subset S, the pairs (A, B) of incomparable proper subsets with
// A ∪ B = S. Every submodular inequality is checked when its union is
// assigned, at which point all other terms are known.
std::vector<std::vector<std::pair<uint32_t, uint32_t>>> union_pairs(int n) {
  const uint32_t count = uint32_t{1} << n;
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> out(count);
  for (uint32_t a = 1; a < count; ++a) {
    for (uint32_t b = a + 1; b < count; ++b) {
      if ((a & b) == a || (a & b) == b) continue;
      out[a | b].emplace_back(a, b);
    }
  }
  return out;
}

struct Interval {
  int64_t lo;
  int64_t hi;
};

Interval allowed(uint32_t s, int64_t k, const std::vector<int64_t>& ranks,
                 const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
  int64_t lo = 0;
  int64_t hi = std::numeric_limits<int64_t>::max();
  if (std::popcount(s) == 1) hi = k;
  for (uint32_t b = s; b != 0; b &= b - 1) {
    const uint32_t sub = s & ~(b & -b);
    lo = std::max(lo, ranks[sub]);
    if (std::popcount(s) > 1) {
      // rho(S) <= rho(S - x) + rho({x})
      hi = std::min(hi, ranks[sub] + ranks[b & -b]);
    }
  }
  for (const auto& [a, b] : pairs) hi = std::min(hi, ranks[a] + ranks[b] - ranks[a & b]);
  return {lo, hi};
}

class Generator {
 public:
  Generator(int n, int64_t k, const std::function<void(const RankTable&)>& visit,
            uint64_t budget, std::optional<int64_t> first)
      : n_(n), k_(k), visit_(visit), budget_(budget), first_(first),
        ground_(GroundSet::standard(n)), pairs_(union_pairs(n)),
        ranks_(size_t{1} << n, 0) {}

  EnumerationStats run() {
    recurse(1);
    return stats_;
  }

 private:
  void recurse(uint32_t s) {
    if (++stats_.nodes > budget_) {
      throw Error(ErrorCode::kSearchBudgetExceeded,
                  "enumeration exceeded the node budget of " + std::to_string(budget_),
                  {{"budget", budget_}, {"nodes", stats_.nodes}});
    }
    if (s == ranks_.size()) {
      ++stats_.tables;
      visit_(RankTable::trusted(ground_, k_, ranks_));
      return;
    }
    Interval iv = allowed(s, k_, ranks_, pairs_[s]);
    if (s == 1 && first_) iv = {std::max(iv.lo, *first_), std::min(iv.hi, *first_)};
    for (int64_t v = iv.lo; v <= iv.hi; ++v) {
      ranks_[s] = v;
      recurse(s + 1);
    }
    ranks_[s] = 0;
  }

  int n_;
  int64_t k_;
  const std::function<void(const RankTable&)>& visit_;
  uint64_t budget_;
  std::optional<int64_t> first_;
  GroundSet ground_;
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> pairs_;
  std::vector<int64_t> ranks_;
  EnumerationStats stats_;
};

}  // namespace

EnumerationStats for_each_polymatroid(int n, int64_t k,
                                      const std::function<void(const RankTable&)>& visit,
                                      uint64_t budget, std::optional<int64_t> first_singleton) {
  if (n < 0 || n > limits().max_elements) {
    throw Error(ErrorCode::kLimitExceeded, "ground set size out of range", {{"n", n}});
  }
  if (k < 0 || k > limits().max_k) {
    throw Error(ErrorCode::kLimitExceeded, "k out of range", {{"k", k}});
  }
  return Generator(n, k, visit, budget, first_singleton).run();
}

uint64_t count_polymatroids(int n, int64_t k) {
  return for_each_polymatroid(n, k, [](const RankTable&) {}).tables;
}

RankTable random_polymatroid(int n, int64_t k, std::mt19937_64& rng) {
  const GroundSet ground = GroundSet::standard(n);
  const auto pairs = union_pairs(n);
  std::vector<int64_t> ranks(size_t{1} << n, 0);
  // Random descent through the same intervals the generator uses; restart on
  // the (rare) dead end where an interval is empty.
  for (;;) {
    bool dead = false;
    for (uint32_t s = 1; s < ranks.size() && !dead; ++s) {
      const Interval iv = allowed(s, k, ranks, pairs[s]);
      if (iv.lo > iv.hi) {
        dead = true;
        break;
      }
      std::uniform_int_distribution<int64_t> pick(iv.lo, iv.hi);
      ranks[s] = pick(rng);
    }
    if (!dead) return RankTable::validate(ground, k, ranks);
    std::fill(ranks.begin(), ranks.end(), 0);
  }
}

}  // namespace pmkit
