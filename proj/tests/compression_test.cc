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

#include <gtest/gtest.h>

#include "enumerate.h"
#include "error.h"
#include "oracles.h"
#include "uniform_minors.h"

namespace pmkit {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

TEST(CompressionTest, ExampleLevels) {
  const RankTable t = doubleton(3, 3, 2, 4);
  const int64_t expected[] = {2, 2, 2, 1};  // rank of f after compressing e at l = 0..3
  for (int64_t l = 0; l <= 3; ++l) {
    const RankTable c = compress(t, "e", l);
    EXPECT_EQ(c.ground().labels(), std::vector<std::string>{"f"});
    EXPECT_EQ(c.k(), 3);
    EXPECT_EQ(c.rank_of(0), expected[l]) << l;
  }
}

TEST(CompressionTest, Errors) {
  const RankTable t = doubleton(3, 3, 2, 4);
  EXPECT_EQ(code_of([&] { compress(t, "z", 1); }), ErrorCode::kUnknownElement);
  EXPECT_EQ(code_of([&] { compress(t, "e", 4); }), ErrorCode::kLevelOutOfRange);
  EXPECT_EQ(code_of([&] { compress(t, "e", -1); }), ErrorCode::kLevelOutOfRange);
}

TEST(CompressionTest, MatchesLatticeOracle) {
  for (int n = 1; n <= 3; ++n) {
    for (int64_t k = 1; k <= (n == 3 ? 2 : 3); ++k) {
      for_each_polymatroid(n, k, [&](const RankTable& t) {
        const oracle::Ranks r(t.ranks().begin(), t.ranks().end());
        for (int e = 0; e < n; ++e) {
          for (int64_t l = 0; l <= k; ++l) {
            const RankTable c = compress(t, e, l);
            std::vector<int64_t> base(static_cast<size_t>(n), 0);
            base[static_cast<size_t>(e)] = l;
            const int64_t shift = oracle::multiset_rank(r, base);
            for (uint32_t s = 0; s < c.ground().subset_count(); ++s) {
              const Subset full = expand_bits(Subset(s), t.full().without(e));
              std::vector<int64_t> a = base;
              for (int j : full.members()) a[static_cast<size_t>(j)] = k;
              EXPECT_EQ(c.rank(Subset(s)), oracle::multiset_rank(r, a) - shift);
            }
          }
        }
      });
    }
  }
}

TEST(CompressionTest, GammaAndChain) {
  const ClassSpec cls = ClassSpec::make(2, 4, 4);
  auto records = enumerate_singleton_excluded(cls);
  for (auto& r : enumerate_doubleton_excluded(cls)) records.push_back(r);
  for (const auto& r : records) {
    const auto links = compression_chain(r.polymatroid, cls);
    const RankTable& last = links.empty() ? r.polymatroid : links.back().result;
    EXPECT_TRUE(is_in_gamma(last, cls));
    for (const auto& link : links) EXPECT_TRUE(is_excluded_minor(link.result, cls));
  }
  EXPECT_TRUE(gamma_size_check(records, cls));
  EXPECT_EQ(code_of([&] { is_in_gamma(singleton(4, 1), cls); }), ErrorCode::kNotExcludedMinor);
}

TEST(CompressionTest, SingletonsAreInGamma) {
  const ClassSpec cls = ClassSpec::make(3, 7, 8);
  for (const auto& r : enumerate_singleton_excluded(cls)) {
    EXPECT_TRUE(is_in_gamma(r.polymatroid, cls));
    EXPECT_TRUE(compression_chain(r.polymatroid, cls).empty());
  }
}

}  // namespace
}  // namespace pmkit
