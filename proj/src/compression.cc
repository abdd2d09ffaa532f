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

#include "compression.h"

#include <algorithm>
#include <numeric>

#include "natural.h"

namespace pmkit {
namespace {

void require_excluded(const RankTable& rho, const ClassSpec& cls) {
  if (!is_excluded_minor(rho, cls)) {
    throw Error(ErrorCode::kNotExcludedMinor, "polymatroid is not an excluded minor",
                {{"a", cls.a}, {"b", cls.b}, {"k", cls.k}});
  }
}

// Element indices ordered by label.
std::vector<int> label_order(const RankTable& rho) {
  std::vector<int> order(static_cast<size_t>(rho.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return rho.ground().label(x) < rho.ground().label(y); });
  return order;
}

}  // namespace

RankTable compress(const RankTable& rho, int element, int64_t level) {
  if (element < 0 || element >= rho.size()) {
    throw Error(ErrorCode::kUnknownElement, "element index out of range",
                {{"element", element}});
  }
  if (level < 0 || level > rho.k()) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "level " + std::to_string(level) + " outside [0, " + std::to_string(rho.k()) +
                    "]",
                {{"level", level}, {"k", rho.k()}});
  }
  const Subset keep = rho.full().without(element);
  const GroundSet ground = rho.ground().restrict_to(keep);
  CountVector a(static_cast<size_t>(rho.size()), 0);
  a[static_cast<size_t>(element)] = level;
  const int64_t base = multiset_rank(rho, a);
  std::vector<int64_t> ranks(ground.subset_count());
  for (uint32_t s = 0; s < ranks.size(); ++s) {
    const Subset sub = expand_bits(Subset(s), keep);
    for (int i : keep.members()) a[static_cast<size_t>(i)] = sub.contains(i) ? rho.k() : 0;
    ranks[s] = multiset_rank(rho, a) - base;
  }
  return RankTable::validate(ground, rho.k(), std::move(ranks));
}

RankTable compress(const RankTable& rho, const std::string& element, int64_t level) {
  return compress(rho, rho.ground().index_of(element), level);
}

bool is_in_gamma(const RankTable& rho, const ClassSpec& cls) {
  require_excluded(rho, cls);
  for (int e = 0; e < rho.size(); ++e) {
    for (int64_t l = 1; l <= rho.rank_of(e) - 1; ++l) {
      if (!in_class(compress(rho, e, l), cls)) return false;
    }
  }
  return true;
}

std::vector<ChainLink> compression_chain(const RankTable& rho, const ClassSpec& cls) {
  require_excluded(rho, cls);
  std::vector<ChainLink> chain;
  RankTable current = rho;
  for (;;) {
    bool moved = false;
    for (int e : label_order(current)) {
      for (int64_t l = 1; !moved && l <= current.rank_of(e) - 1; ++l) {
        RankTable next = compress(current, e, l);
        if (in_class(next, cls)) continue;
        if (!is_excluded_minor(next, cls)) {
          throw Error(ErrorCode::kClassificationMismatch,
                      "internal compression left the class without being an excluded minor",
                      {{"element", current.ground().label(e)}, {"level", l}});
        }
        chain.push_back({{current.ground().label(e), l}, next});
        current = std::move(next);
        moved = true;
      }
      if (moved) break;
    }
    if (!moved) return chain;
  }
}

bool gamma_size_check(const std::vector<ExcludedMinorRecord>& records, const ClassSpec& cls) {
  return std::all_of(records.begin(), records.end(), [&](const ExcludedMinorRecord& r) {
    return !is_in_gamma(r.polymatroid, cls) || r.polymatroid.size() <= cls.b;
  });
}

}  // namespace pmkit
