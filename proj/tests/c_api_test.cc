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


#include "pmkit/pmkit.h"

#include <gtest/gtest.h>

#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;

const char kExample[] =
    R"({"format": 1, "ground": ["e", "f"], "k": 3, "ranks": {"": 0, "e": 3, "f": 2, "e,f": 4}})";

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  pmkit_string_free(s);
  return out;
}

class CApiTest : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_EQ(pmkit_polymatroid_from_json(kExample, &p_), PMKIT_OK); }
  void TearDown() override { pmkit_polymatroid_free(p_); }
  pmkit_polymatroid* p_ = nullptr;
};

TEST_F(CApiTest, Basics) {
  EXPECT_STREQ(pmkit_version(), "0.1.0");
  EXPECT_STREQ(pmkit_status_name(PMKIT_NOT_SUBMODULAR), "NotSubmodular");
  int size = 0;
  int64_t k = 0, r = 0, nullity = 0;
  ASSERT_EQ(pmkit_polymatroid_size(p_, &size), PMKIT_OK);
  ASSERT_EQ(pmkit_polymatroid_k(p_, &k), PMKIT_OK);
  ASSERT_EQ(pmkit_polymatroid_rank(p_, "e,f", &r), PMKIT_OK);
  ASSERT_EQ(pmkit_nullity(p_, &nullity), PMKIT_OK);
  EXPECT_EQ(size, 2);
  EXPECT_EQ(k, 3);
  EXPECT_EQ(r, 4);
  EXPECT_EQ(nullity, -2);  // |E| - rho(E)
  EXPECT_STREQ(pmkit_last_error(), "");
  char* text = nullptr;
  ASSERT_EQ(pmkit_polymatroid_to_json(p_, &text), PMKIT_OK);
  EXPECT_EQ(json::parse(take(text)), json::parse(kExample));
}

TEST_F(CApiTest, Errors) {
  pmkit_polymatroid* q = nullptr;
  EXPECT_EQ(pmkit_polymatroid_from_json(
                R"({"ground": ["e","f"], "k": 2, "ranks": {"": 0, "e": 1, "f": 1, "e,f": 3}})",
                &q),
            PMKIT_NOT_SUBMODULAR);
  EXPECT_EQ(q, nullptr);
  const json err = json::parse(pmkit_last_error());
  EXPECT_EQ(err["status"], PMKIT_NOT_SUBMODULAR);
  EXPECT_EQ(err["error"], "NotSubmodular");
  EXPECT_EQ(pmkit_polymatroid_from_json("{", &q), PMKIT_PARSE_ERROR);
  int64_t r = 0;
  EXPECT_EQ(pmkit_polymatroid_rank(p_, "x", &r), PMKIT_UNKNOWN_ELEMENT);
  EXPECT_EQ(pmkit_polymatroid_rank(nullptr, "e", &r), PMKIT_INVALID_ARGUMENT);
  EXPECT_EQ(pmkit_compress(p_, "e", 9, &q), PMKIT_LEVEL_OUT_OF_RANGE);
  char* out = nullptr;
  EXPECT_EQ(pmkit_polytope_csv(p_, PMKIT_POLYTOPE_MINOR_FACE, "e", "e", &out),
            PMKIT_OVERLAPPING_SETS);
  int passed = 0;
  EXPECT_EQ(pmkit_verify("nonsense", 1, 0, &passed, &out), PMKIT_UNKNOWN_SUITE);
}

TEST_F(CApiTest, Operations) {
  pmkit_polymatroid *del = nullptr, *con = nullptr, *comp = nullptr, *dual = nullptr;
  ASSERT_EQ(pmkit_delete(p_, "e", &del), PMKIT_OK);
  ASSERT_EQ(pmkit_contract(p_, "e", &con), PMKIT_OK);
  ASSERT_EQ(pmkit_compress(p_, "e", 3, &comp), PMKIT_OK);
  ASSERT_EQ(pmkit_k_dual(p_, &dual), PMKIT_OK);
  int64_t r = 0;
  ASSERT_EQ(pmkit_polymatroid_rank(del, "f", &r), PMKIT_OK);
  EXPECT_EQ(r, 2);
  ASSERT_EQ(pmkit_polymatroid_rank(con, "f", &r), PMKIT_OK);
  EXPECT_EQ(r, 1);
  ASSERT_EQ(pmkit_polymatroid_rank(comp, "f", &r), PMKIT_OK);
  EXPECT_EQ(r, 1);
  ASSERT_EQ(pmkit_polymatroid_rank(dual, "e", &r), PMKIT_OK);
  EXPECT_EQ(r, 1);  // 3 + 2 - 4
  int iso = 0;
  ASSERT_EQ(pmkit_is_isomorphic(con, comp, &iso), PMKIT_OK);
  EXPECT_EQ(iso, 1);
  for (auto* q : {del, con, comp, dual}) pmkit_polymatroid_free(q);

  pmkit_polymatroid *u = nullptr, *sum = nullptr;
  ASSERT_EQ(pmkit_uniform(2, 4, &u), PMKIT_OK);
  ASSERT_EQ(pmkit_scalar_multiply(3, u, &sum), PMKIT_OK);
  ASSERT_EQ(pmkit_polymatroid_rank(sum, "e,f,g,h", &r), PMKIT_OK);
  EXPECT_EQ(r, 6);
  pmkit_polymatroid_free(sum);
  sum = nullptr;
  EXPECT_EQ(pmkit_direct_sum(p_, p_, &sum), PMKIT_LABEL_COLLISION);
  EXPECT_EQ(sum, nullptr);
  pmkit_polymatroid_free(u);
}

TEST_F(CApiTest, NaturalRank) {
  const int64_t counts[] = {1, 3};
  int64_t r = 0;
  ASSERT_EQ(pmkit_natural_rank(p_, counts, 2, &r), PMKIT_OK);
  EXPECT_EQ(r, 3);
  const int64_t out_of_grid[] = {4, 0};
  EXPECT_EQ(pmkit_natural_rank(p_, out_of_grid, 2, &r), PMKIT_OUT_OF_GRID);
  char* csv = nullptr;
  ASSERT_EQ(pmkit_natural_grid_csv(p_, &csv), PMKIT_OK);
  const std::string grid = take(csv);
  EXPECT_EQ(grid.rfind("e,f,rank\n", 0), 0u);
  EXPECT_NE(grid.find("3,3,4\n"), std::string::npos);
}

TEST_F(CApiTest, ClassesAndDecomposition) {
  char* out = nullptr;
  ASSERT_EQ(pmkit_class_check_json(p_, 1, 2, &out), PMKIT_OK);
  EXPECT_EQ(json::parse(take(out))["in_class"], false);
  ASSERT_EQ(pmkit_excluded_check_json(p_, 1, 2, &out), PMKIT_OK);
  EXPECT_EQ(json::parse(take(out))["excluded_minor"], false);
  ASSERT_EQ(pmkit_decompose_json(p_, 0, PMKIT_DECOMPOSE_ESSENTIAL, &out), PMKIT_OK);
  const json d = json::parse(take(out));
  EXPECT_TRUE(d.contains("tau"));
  EXPECT_TRUE(d["n"].is_number_integer());
  ASSERT_EQ(pmkit_collapse_check_json(p_, nullptr, 0, &out), PMKIT_OK);
  EXPECT_TRUE(json::parse(take(out))["rows"].is_array());
}

TEST(CApiEnumerateTest, Catalog) {
  pmkit_enumerate_options opts{2, 0, 1, 0};
  char* out = nullptr;
  ASSERT_EQ(pmkit_enumerate_json(2, 4, 4, &opts, &out), PMKIT_OK);
  const json doc = json::parse(take(out));
  EXPECT_EQ(doc["records"].size(), 6u);
  EXPECT_FALSE(doc["metadata"].contains("timestamp"));
  EXPECT_EQ(pmkit_enumerate_json(2, 4, 3, &opts, &out), PMKIT_REGIME_VIOLATED);
  opts.max_elements = 9;
  EXPECT_EQ(pmkit_enumerate_json(2, 4, 4, &opts, &out), PMKIT_LIMIT_EXCEEDED);
}

TEST_F(CApiTest, Polytope) {
  char* out = nullptr;
  ASSERT_EQ(pmkit_polytope_csv(p_, PMKIT_POLYTOPE_BASE, nullptr, nullptr, &out), PMKIT_OK);
  EXPECT_EQ(take(out), "e,f\n2,2\n3,1\n");
  int inside = 0;
  ASSERT_EQ(pmkit_polytope_contains(p_, "5/2,3/2", 1, &inside), PMKIT_OK);
  EXPECT_EQ(inside, 1);
  ASSERT_EQ(pmkit_polytope_contains(p_, "3,3/2", 0, &inside), PMKIT_OK);
  EXPECT_EQ(inside, 0);
  EXPECT_EQ(pmkit_polytope_contains(p_, "1", 0, &inside), PMKIT_DIMENSION_MISMATCH);
  ASSERT_EQ(pmkit_polytope_svg(p_, &out), PMKIT_OK);
  EXPECT_NE(take(out).find("<svg"), std::string::npos);
}

TEST(CApiLimitsTest, RoundTrip) {
  int max_elements = 0;
  int64_t max_k = 0;
  uint64_t budget = 0;
  ASSERT_EQ(pmkit_get_limits(&max_elements, &max_k, &budget), PMKIT_OK);
  ASSERT_EQ(pmkit_set_limits(3, 5, 100), PMKIT_OK);
  int e2 = 0;
  int64_t k2 = 0;
  uint64_t b2 = 0;
  ASSERT_EQ(pmkit_get_limits(&e2, &k2, &b2), PMKIT_OK);
  EXPECT_EQ(e2, 3);
  EXPECT_EQ(k2, 5);
  EXPECT_EQ(b2, 100u);
  EXPECT_EQ(pmkit_set_limits(3, 5, 0), PMKIT_INVALID_ARGUMENT);
  ASSERT_EQ(pmkit_set_limits(max_elements, max_k, budget), PMKIT_OK);
}

}  // namespace
