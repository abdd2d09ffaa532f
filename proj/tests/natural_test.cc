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

#include <gtest/gtest.h>

#include "enumerate.h"
#include "error.h"
#include "oracles.h"

namespace pmkit {
namespace {

oracle::Ranks raw(const RankTable& t) { return {t.ranks().begin(), t.ranks().end()}; }

TEST(NaturalTest, ExampleGrid) {
  // R at (e, f) for rho(e) = 3, rho(f) = 2, rho(ef) = 4, k = 3; rows are f.
  const int64_t expected[4][4] = {{0, 1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4, 4}, {2, 3, 4, 4}};
  MultisetRankGrid grid(doubleton(3, 3, 2, 4));
  for (int64_t f = 0; f <= 3; ++f) {
    for (int64_t e = 0; e <= 3; ++e) {
      const CountVector a = {e, f};
      EXPECT_EQ(grid.at(a), expected[f][e]) << e << "," << f;
    }
  }
}

TEST(NaturalTest, MinFormulaMatchesLatticeOracle) {
  auto sweep = [](int n, int64_t k) {
    for_each_polymatroid(n, k, [&](const RankTable& t) {
      MultisetRankGrid grid(t);
      for (size_t i = 0; i < grid.point_count(); ++i) {
        const CountVector a = grid.point(i);
        ASSERT_EQ(multiset_rank(t, a), oracle::multiset_rank(raw(t), a));
        ASSERT_EQ(grid.at_index(i), multiset_rank(t, a));
        ASSERT_EQ(multiset_rank_oracle(t, a), multiset_rank(t, a));
      }
    });
  };
  for (int64_t k = 1; k <= 3; ++k) sweep(2, k);
  for (int64_t k = 1; k <= 2; ++k) sweep(3, k);
}

TEST(NaturalTest, ExplicitMatroidMatchesOracle) {
  for (int64_t k = 1; k <= 3; ++k) {
    for_each_polymatroid(2, k, [&](const RankTable& t) {
      const RankTable m = explicit_natural_matroid(t);
      EXPECT_EQ(m.k(), 1);
      EXPECT_EQ(raw(m), oracle::natural_matroid(raw(t), k));
      EXPECT_TRUE(clone_check(t));
    });
  }
}

TEST(NaturalTest, ExplicitMatroidLabelsAndLimit) {
  const RankTable m = explicit_natural_matroid(doubleton(2, 1, 2, 2));
  EXPECT_EQ(m.ground().labels(), (std::vector<std::string>{"e1", "e2", "f1", "f2"}));
  try {
    explicit_natural_matroid(RankTable::validate(GroundSet::standard(2), 9, {0, 1, 1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(NaturalTest, PartitionMapAndCloneRank) {
  const RankTable t = doubleton(3, 3, 2, 4);
  const std::vector<CloneElement> clones = {{"e", 1}, {"f", 1}, {"f", 2}, {"f", 3}};
  EXPECT_EQ(partition_map(t, clones), (CountVector{1, 3}));
  EXPECT_EQ(natural_rank(t, clones), 3);
  auto code = [&](std::vector<CloneElement> c) {
    try {
      partition_map(t, c);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kOk;
  };
  EXPECT_EQ(code({{"z", 1}}), ErrorCode::kUnknownElement);
  EXPECT_EQ(code({{"e", 4}}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code({{"e", 1}, {"e", 1}}), ErrorCode::kInvalidArgument);
}

TEST(NaturalTest, OutOfGrid) {
  const RankTable t = doubleton(3, 3, 2, 4);
  for (const CountVector& a : {CountVector{4, 0}, CountVector{-1, 0}, CountVector{1}}) {
    try {
      multiset_rank(t, a);
      FAIL();
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::kOutOfGrid || e.code() == ErrorCode::kDimensionMismatch);
    }
  }
}

TEST(NaturalTest, MinorRankAndCsv) {
  MultisetRankGrid grid(doubleton(3, 3, 2, 4));
  const CountVector c = {2, 0}, y = {0, 3};
  EXPECT_EQ(minor_multiset_rank(grid, c, y), 2);
  const std::string csv = grid.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "e,f,rank");
  EXPECT_NE(csv.find("\n3,3,4\n"), std::string::npos);
}

TEST(NaturalTest, DualityIdentity) {
  for_each_polymatroid(2, 3, [](const RankTable& t) {
    MultisetRankGrid g(t), gd(k_dual(t));
    const CountVector all = {3, 3};
    for (size_t i = 0; i < g.point_count(); ++i) {
      const CountVector a = g.point(i);
      const CountVector comp = {3 - a[0], 3 - a[1]};
      EXPECT_EQ(gd.at(a), a[0] + a[1] - g.at(all) + g.at(comp));
    }
  });
}

}  // namespace
}  // namespace pmkit
