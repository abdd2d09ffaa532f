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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "error.h"
#include "oracles.h"

namespace pmkit {
namespace {

std::set<oracle::Ranks> library_tables(int n, int64_t k) {
  std::set<oracle::Ranks> out;
  for_each_polymatroid(n, k, [&](const RankTable& t) {
    out.insert(oracle::Ranks(t.ranks().begin(), t.ranks().end()));
  });
  return out;
}

std::set<oracle::Ranks> oracle_tables(int n, int64_t k) {
  std::set<oracle::Ranks> out;
  oracle::for_each_polymatroid(n, k, [&](const oracle::Ranks& r) { out.insert(r); });
  return out;
}

TEST(EnumerateTest, MatchesBruteForce) {
  for (int64_t k = 0; k <= 5; ++k) EXPECT_EQ(library_tables(2, k), oracle_tables(2, k)) << k;
  for (int64_t k = 0; k <= 3; ++k) EXPECT_EQ(library_tables(3, k), oracle_tables(3, k)) << k;
  EXPECT_EQ(library_tables(1, 8), oracle_tables(1, 8));
}

TEST(EnumerateTest, FrozenCounts) {
  const uint64_t two[] = {5, 14, 30, 55, 91};
  for (int64_t k = 1; k <= 5; ++k) EXPECT_EQ(count_polymatroids(2, k), two[k - 1]);
  const uint64_t three[] = {16, 115, 536, 1895};
  for (int64_t k = 1; k <= 4; ++k) EXPECT_EQ(count_polymatroids(3, k), three[k - 1]);
  EXPECT_EQ(count_polymatroids(3, 8), 66297u);
  EXPECT_EQ(count_polymatroids(0, 3), 1u);
}

TEST(EnumerateTest, LexicographicOrder) {
  std::vector<int64_t> prev;
  for_each_polymatroid(2, 3, [&](const RankTable& t) {
    std::vector<int64_t> cur(t.ranks().begin(), t.ranks().end());
    EXPECT_LT(prev, cur);
    prev = cur;
  });
}

TEST(EnumerateTest, BudgetIsEnforced) {
  try {
    for_each_polymatroid(3, 4, [](const RankTable&) {}, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSearchBudgetExceeded);
  }
}

TEST(EnumerateTest, FirstSingletonPartitionsTheSpace) {
  uint64_t total = 0;
  for (int64_t v = 0; v <= 3; ++v) {
    for_each_polymatroid(3, 3, [&](const RankTable& t) {
      EXPECT_EQ(t.rank_of(0), v);
      ++total;
    }, UINT64_MAX, v);
  }
  EXPECT_EQ(total, count_polymatroids(3, 3));
}

TEST(EnumerateTest, RandomTablesAreValid) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const RankTable t = random_polymatroid(1 + i % 4, 1 + i % 5, rng);
    EXPECT_TRUE(oracle::is_polymatroid(oracle::Ranks(t.ranks().begin(), t.ranks().end()), t.k()));
  }
}

}  // namespace
}  // namespace pmkit
