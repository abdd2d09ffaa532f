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


#include "uniform_minors.h"

#include <gtest/gtest.h>

#include <set>

#include "enumerate.h"
#include "error.h"
#include "oracles.h"

namespace pmkit {
namespace {

oracle::Ranks raw(const RankTable& t) { return {t.ranks().begin(), t.ranks().end()}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

using Triple = std::tuple<int64_t, int64_t, int64_t>;

std::set<Triple> triples(const std::vector<ExcludedMinorRecord>& records) {
  std::set<Triple> out;
  for (const auto& r : records) {
    const RankTable& t = r.polymatroid;
    out.insert({std::min(t.rank_of(0), t.rank_of(1)), std::max(t.rank_of(0), t.rank_of(1)),
                t.total_rank()});
  }
  return out;
}

TEST(UniformMinorsTest, DetectionMatchesExplicitMatroid) {
  const std::pair<int, int> targets[] = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}, {2, 5}};
  auto sweep = [&](int n, int64_t k) {
    for_each_polymatroid(n, k, [&](const RankTable& t) {
      const oracle::Ranks m = oracle::natural_matroid(raw(t), k);
      for (const auto& [a0, b0] : targets) {
        const auto w = has_uniform_minor(t, a0, b0);
        ASSERT_EQ(w.has_value(), oracle::has_uniform_minor(m, a0, b0))
            << t.k() << " " << a0 << "," << b0;
        ASSERT_EQ(has_uniform_minor(t, a0, b0, false).has_value(), w.has_value());
        if (w) {
          EXPECT_EQ(w->rank, a0);
          EXPECT_EQ(w->size, b0);
        }
      }
    });
  };
  for (int64_t k = 1; k <= 4; ++k) sweep(2, k);
  for (int64_t k = 1; k <= 2; ++k) sweep(3, k);
  sweep(1, 8);
}

TEST(UniformMinorsTest, ClassMembershipMatchesOracle) {
  const ClassSpec cls = ClassSpec::make(2, 4, 4);
  for (int n = 1; n <= 2; ++n) {
    for_each_polymatroid(n, 4, [&](const RankTable& t) {
      EXPECT_EQ(in_class(t, cls), oracle::in_class(raw(t), 4, 2, 4));
      EXPECT_EQ(is_excluded_minor(t, cls), oracle::is_excluded_minor(raw(t), 4, 2, 4));
    });
  }
}

TEST(UniformMinorsTest, Singletons) {
  std::vector<int64_t> ranks;
  for (const auto& r : enumerate_singleton_excluded(ClassSpec::make(3, 7, 8))) {
    ranks.push_back(r.polymatroid.rank_of(0));
    EXPECT_EQ(r.tags, (std::vector<std::string>{"singleton", "Ex^" + std::to_string(ranks.back())}));
    EXPECT_FALSE(r.witnesses.empty());
  }
  EXPECT_EQ(ranks, (std::vector<int64_t>{3, 4, 5}));
  EXPECT_EQ(enumerate_singleton_excluded(ClassSpec::make(2, 5, 6)).size(), 3u);
  EXPECT_EQ(enumerate_singleton_excluded(ClassSpec::make(2, 4, 4)).size(), 1u);
}

// Excluded doubletons of (2,4,4) computed by oracle::is_excluded_minor over
// every doubleton, then frozen.
TEST(UniformMinorsTest, DoubletonsOfTwoFourFour) {
  const ClassSpec cls = ClassSpec::make(2, 4, 4);
  const std::set<Triple> frozen = {{3, 3, 3}, {3, 3, 4}, {3, 4, 4}, {4, 4, 4}, {4, 4, 5}};
  std::set<Triple> oracle_set;
  for (int64_t re = 0; re <= 4; ++re) {
    for (int64_t rf = re; rf <= 4; ++rf) {
      for (int64_t m = rf; m <= re + rf; ++m) {
        if (oracle::is_excluded_minor({0, re, rf, m}, 4, 2, 4)) oracle_set.insert({re, rf, m});
      }
    }
  }
  EXPECT_EQ(oracle_set, frozen);
  EXPECT_EQ(triples(enumerate_doubleton_excluded(cls)), frozen);
}

// The listed doubleton (1,6,6) of (3,7,8) contracts to a rank-5 singleton,
// whose 8-clone natural matroid U_{5,8} has a U_{4,7} minor.
TEST(UniformMinorsTest, ListedDoubletonHasExcludedContraction) {
  const ClassSpec cls = ClassSpec::make(3, 7, 8);
  const RankTable t = doubleton(8, 1, 6, 6);
  const RankTable c = contract_set(t, Subset::singleton(0));
  EXPECT_EQ(c.rank_of(0), 5);
  EXPECT_FALSE(oracle::in_class(raw(c), 8, 3, 7));
  EXPECT_FALSE(in_class(c, cls));
  EXPECT_FALSE(is_excluded_minor(t, cls));
  EXPECT_EQ(excluded_minor_obstruction(t, cls), "contract e");
}

TEST(UniformMinorsTest, ThreeSevenEightDoubletons) {
  const ClassSpec cls = ClassSpec::make(3, 7, 8);
  const std::set<Triple> frozen = {{6, 6, 6}, {6, 6, 7}, {6, 6, 8}, {6, 7, 7}, {6, 7, 8},
                                   {6, 8, 8}, {7, 7, 7}, {7, 7, 8}, {7, 7, 9}, {7, 8, 8},
                                   {7, 8, 9}, {8, 8, 8}, {8, 8, 9}, {8, 8, 10}};
  EXPECT_EQ(triples(enumerate_doubleton_excluded(cls)), frozen);
  // Every listed triple: excluded exactly when both contractions stay in the class.
  const auto audit = audit_doubleton_table(cls);
  EXPECT_EQ(audit.listed.size(), 40u);
  EXPECT_EQ(audit.rejected.size(), 26u);
  EXPECT_TRUE(audit.unlisted.empty());
  for (const auto& e : audit.listed) {
    const oracle::Ranks r = {0, e.rho_e, e.rho_f, e.m};
    const bool contractions_in = oracle::in_class(oracle::minor(r, 1, 0), 8, 3, 7) &&
                                 oracle::in_class(oracle::minor(r, 2, 0), 8, 3, 7);
    EXPECT_EQ(e.excluded, contractions_in);
    if (!e.excluded) EXPECT_EQ(e.obstruction.rfind("contract", 0), 0u);
  }
}

TEST(UniformMinorsTest, ClassifyRows) {
  EXPECT_EQ(classify_doubleton(3, 8, 1, 2, 2), std::vector<int>{1});
  EXPECT_EQ(classify_doubleton(3, 8, 1, 7, 8), std::vector<int>{2});
  EXPECT_EQ(classify_doubleton(3, 8, 1, 6, 6), std::vector<int>{3});
  EXPECT_EQ(classify_doubleton(3, 8, 6, 1, 6), std::vector<int>{3});
  EXPECT_EQ(classify_doubleton(3, 8, 7, 7, 14), std::vector<int>{4});
  EXPECT_EQ(classify_doubleton(3, 8, 6, 6, 6), std::vector<int>{5});
  EXPECT_EQ(classify_doubleton(3, 8, 1, 4, 4), std::vector<int>{6});
  EXPECT_EQ(classify_doubleton(3, 8, 4, 4, 5), (std::vector<int>{6, 7}));
}

TEST(UniformMinorsTest, CountFormula) {
  EXPECT_EQ(count_formula(3, 8), 40);
  EXPECT_EQ(count_formula(2, 4), 10);
  EXPECT_EQ(count_formula(2, 6), 16);
  for (int64_t k = 1; k <= 10; ++k) EXPECT_EQ(count_formula(1, k), k);
  EXPECT_EQ(code_of([] { count_formula(int64_t{1} << 40, int64_t{1} << 40); }),
            ErrorCode::kOverflow);
}

TEST(UniformMinorsTest, ParameterErrors) {
  EXPECT_EQ(code_of([] { ClassSpec::make(3, 5, 8); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(code_of([] { ClassSpec::make(0, 2, 8); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(code_of([] { enumerate_singleton_excluded(ClassSpec::make(2, 4, 3)); }),
            ErrorCode::kRegimeViolated);
  EXPECT_EQ(code_of([] { in_class(singleton(3, 1), ClassSpec::make(2, 4, 4)); }),
            ErrorCode::kKMismatch);
}

TEST(UniformMinorsTest, NullityPrune) {
  const ClassSpec cls = ClassSpec::make(3, 7, 8);
  const CountVector zero = {0};
  EXPECT_FALSE(nullity_prune(singleton(8, 6), zero, cls));
  EXPECT_TRUE(nullity_prune(singleton(8, 4), zero, cls));
  EXPECT_FALSE(nullity_prune(singleton(8, 2), zero, cls));
}

TEST(UniformMinorsTest, SearchReproducesClassification) {
  const ClassSpec cls = ClassSpec::make(2, 4, 4);
  SearchOptions opts;
  opts.max_elements = 2;
  auto classified = enumerate_singleton_excluded(cls);
  for (auto& r : enumerate_doubleton_excluded(cls)) classified.push_back(r);
  const auto found = search_excluded(cls, opts);
  ASSERT_EQ(found.size(), classified.size());
  for (size_t i = 0; i < found.size(); ++i) EXPECT_EQ(found[i].canonical, classified[i].canonical);
  opts.max_elements = 3;
  const auto one = search_excluded(cls, opts);
  opts.jobs = 3;
  const auto three = search_excluded(cls, opts);
  ASSERT_EQ(one.size(), three.size());
  for (size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].canonical, three[i].canonical);
}

TEST(UniformMinorsTest, SearchLimits) {
  const ClassSpec cls = ClassSpec::make(2, 4, 4);
  SearchOptions opts;
  opts.max_elements = 4;
  EXPECT_EQ(code_of([&] { search_excluded(cls, opts); }), ErrorCode::kInvalidParams);
  opts.max_elements = 3;
  opts.budget = 50;
  EXPECT_EQ(code_of([&] { search_excluded(cls, opts); }), ErrorCode::kSearchBudgetExceeded);
}

TEST(UniformMinorsTest, HygieneChecks) {
  const ClassSpec cls = ClassSpec::make(3, 7, 8);
  auto records = enumerate_singleton_excluded(cls);
  for (auto& r : enumerate_doubleton_excluded(cls)) records.push_back(r);
  EXPECT_TRUE(simple_records_check(records));
  EXPECT_TRUE(dual_closure_check(records, cls));
  std::vector<ExcludedMinorRecord> with_loop = {make_record(doubleton(8, 0, 4, 4), cls)};
  EXPECT_FALSE(simple_records_check(with_loop));
}

}  // namespace
}  // namespace pmkit
