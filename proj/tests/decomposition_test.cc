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


#include "decomposition.h"

#include <gtest/gtest.h>

#include "enumerate.h"
#include "error.h"
#include "oracles.h"
#include "polytope.h"
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

// Coloop masks C for which rho - (k-n)|A ∩ C| is an n-polymatroid.
std::vector<uint32_t> oracle_coloop_sets(const RankTable& rho, int64_t n) {
  std::vector<uint32_t> out;
  const uint32_t count = rho.ground().subset_count();
  for (uint32_t c = 0; c < count; ++c) {
    oracle::Ranks tau(count);
    for (uint32_t s = 0; s < count; ++s) {
      tau[s] = rho.rank(Subset(s)) - (rho.k() - n) * std::popcount(s & c);
    }
    if (oracle::is_polymatroid(tau, n)) out.push_back(c);
  }
  return out;
}

TEST(DecompositionTest, ExhaustiveMatchesOracle) {
  for (int64_t k = 1; k <= 5; ++k) {
    for (int n = 1; n <= 2; ++n) {
      for_each_polymatroid(n, k, [&](const RankTable& rho) {
        for (int64_t level = 0; level <= k; ++level) {
          const auto got = corner_decompose_exhaustive(rho, level);
          const auto want = oracle_coloop_sets(rho, level);
          ASSERT_EQ(got.size(), want.size());
          for (size_t i = 0; i < got.size(); ++i) {
            EXPECT_EQ(got[i].r.coloops.bits(), want[i]);
            EXPECT_EQ(got[i].reconstruct(k), rho);
          }
          if (2 * level + 1 <= k) {
            EXPECT_LE(want.size(), 1u);
            if (want.empty()) {
              EXPECT_EQ(code_of([&] { corner_decompose(rho, level); }),
                        ErrorCode::kNotDecomposable);
            } else {
              EXPECT_EQ(corner_decompose(rho, level), got.front());
            }
          }
        }
      });
    }
  }
}

TEST(DecompositionTest, SingletonsAndUniform) {
  const RankTable rho = singleton(8, 7);
  const auto d = corner_decompose(rho, 2);
  EXPECT_EQ(d.tau.rank_of(0), 1);
  EXPECT_TRUE(d.r.coloops.contains(0));
  EXPECT_EQ(corner_decompose(singleton(8, 2), 2).r.coloops.bits(), 0u);
  EXPECT_EQ(code_of([] { corner_decompose(singleton(8, 4), 2); }), ErrorCode::kNotDecomposable);
  // Free matroids have bound 0; U_{1,2} needs 1.
  EXPECT_EQ(essential_bound(uniform(2, 2)).n, 0);
  EXPECT_EQ(essential_bound(uniform(1, 2)).n, 1);
}

TEST(DecompositionTest, Errors) {
  const RankTable rho = singleton(4, 1);
  EXPECT_EQ(code_of([&] { corner_decompose(rho, -1); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(code_of([&] { corner_decompose(rho, 2); }), ErrorCode::kUniquenessRegimeViolated);
  EXPECT_EQ(code_of([&] { corner_decompose_exhaustive(rho, 5); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(code_of([&] { decompose_via_minors(rho, 2); }), ErrorCode::kRegimeViolated);
  EXPECT_EQ(code_of([] { decompose_via_minors(doubleton(4, 2, 2, 2), 0); }),
            ErrorCode::kMinorNotDecomposable);
}

TEST(DecompositionTest, EssentialBoundIsLeast) {
  for (int64_t k = 1; k <= 5; ++k) {
    for_each_polymatroid(2, k, [&](const RankTable& rho) {
      const auto d = essential_bound(rho);
      EXPECT_EQ(d.reconstruct(k), rho);
      for (int64_t level = 0; level < d.n; ++level) {
        EXPECT_TRUE(oracle_coloop_sets(rho, level).empty());
      }
      EXPECT_EQ(d.r.coloops.bits(), oracle_coloop_sets(rho, d.n).front());
    });
  }
}

TEST(DecompositionTest, GluingMatchesDirect) {
  for_each_polymatroid(2, 7, [&](const RankTable& rho) {
    for (int64_t m = 0; m <= 2; ++m) {
      std::optional<CornerDecomposition> direct;
      try {
        direct = corner_decompose(rho, m);
      } catch (const Error&) {
      }
      if (direct) {
        EXPECT_EQ(decompose_via_minors(rho, m), *direct);
      } else {
        EXPECT_EQ(code_of([&] { decompose_via_minors(rho, m); }),
                  ErrorCode::kMinorNotDecomposable);
      }
    }
  });
}

TEST(DecompositionTest, GlueErrors) {
  const RankTable rho = doubleton(7, 1, 1, 2);
  const Subset e = Subset::singleton(0);
  const auto del = corner_decompose(delete_set(rho, e), 1);
  const auto cont = corner_decompose(contract_set(rho, e), 1);
  const auto res = corner_decompose(restrict_to(rho, e), 1);
  EXPECT_EQ(glue_decomposition(rho, 0, del, cont, res), corner_decompose(rho, 1));
  const auto other = corner_decompose(delete_set(rho, e), 2);
  EXPECT_EQ(code_of([&] { glue_decomposition(rho, 0, other, cont, res); }),
            ErrorCode::kLevelMismatch);
  EXPECT_EQ(code_of([&] { glue_decomposition(rho, 0, res, cont, res); }),
            ErrorCode::kGroundMismatch);
  const RankTable small = doubleton(3, 1, 1, 2);
  const auto d0 = corner_decompose(delete_set(small, e), 1);
  EXPECT_EQ(code_of([&] { glue_decomposition(small, 0, d0, d0, d0); }),
            ErrorCode::kRegimeViolated);
}

TEST(DecompositionTest, Collapse) {
  for (int64_t k = 1; k <= 6; ++k) {
    for_each_polymatroid(2, k, [&](const RankTable& rho) {
      const auto rows = collapse_report(rho);
      const int64_t m = essential_bound(rho).n;
      EXPECT_EQ(static_cast<int64_t>(rows.size()), 2 * std::max<int64_t>(0, k - 2 * m + 1));
      for (const auto& row : rows) {
        const int e = row.element == "e" ? 0 : 1;
        const CollapseTag want =
            row.level >= rho.rank_of(e) ? CollapseTag::kContraction : CollapseTag::kDeletion;
        EXPECT_EQ(row.tag, want);
      }
    });
  }
  EXPECT_EQ(code_of([] { compression_collapse(singleton(8, 4), 0, 0); }),
            ErrorCode::kHypothesisViolated);
  EXPECT_STREQ(collapse_tag_name(CollapseTag::kDeletion), "deletion");
  EXPECT_STREQ(collapse_tag_name(CollapseTag::kContraction), "contraction");
}

TEST(DecompositionTest, DoubletonTau) {
  const auto d = doubleton_canonical_tau(7, 6, 13, 3, 8);
  EXPECT_EQ(d.n, 2);
  EXPECT_EQ(d.reconstruct(8), doubleton(8, 7, 6, 13));
  EXPECT_EQ(d, corner_decompose(doubleton(8, 7, 6, 13), 2));
  EXPECT_EQ(code_of([] { doubleton_canonical_tau(6, 6, 6, 3, 8); }), ErrorCode::kNotInTable);
  EXPECT_EQ(code_of([] { doubleton_canonical_tau(4, 4, 5, 3, 8); }), ErrorCode::kNotInTable);
}

TEST(DecompositionTest, Confinement) {
  for_each_polymatroid(2, 5, [&](const RankTable& rho) {
    const auto d = essential_bound(rho);
    EXPECT_TRUE(corner_confinement(rho, d));
    const CornerRegion region = CornerRegion::of(d, rho.k());
    for (const auto& p : lattice_points(rho, true)) EXPECT_TRUE(region.contains(p));
  });
  const CornerRegion region{1, {0, 3}};
  const int64_t inside[] = {1, 4}, outside[] = {2, 4}, short_point[] = {1};
  EXPECT_TRUE(region.contains(inside));
  EXPECT_FALSE(region.contains(outside));
  EXPECT_FALSE(region.contains(short_point));
}

}  // namespace
}  // namespace pmkit
