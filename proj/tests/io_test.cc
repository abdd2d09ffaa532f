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


#include "io.h"

#include <gtest/gtest.h>

#include <random>

#include "enumerate.h"
#include "error.h"

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

const char kExample[] =
    R"({"format": 1, "ground": ["e", "f"], "k": 3, "ranks": {"": 0, "e": 3, "f": 2, "e,f": 4}})";

TEST(IoTest, ParsesExample) {
  const RankTable rho = parse_polymatroid(kExample);
  EXPECT_EQ(rho, doubleton(3, 3, 2, 4));
  EXPECT_EQ(rho.ground().labels(), (std::vector<std::string>{"e", "f"}));
}

TEST(IoTest, FrozenSerialization) {
  EXPECT_EQ(serialize_polymatroid(doubleton(3, 3, 2, 4)),
            "{\n"
            "  \"format\": 1,\n"
            "  \"ground\": [\n"
            "    \"e\",\n"
            "    \"f\"\n"
            "  ],\n"
            "  \"k\": 3,\n"
            "  \"ranks\": {\n"
            "    \"\": 0,\n"
            "    \"e\": 3,\n"
            "    \"f\": 2,\n"
            "    \"e,f\": 4\n"
            "  }\n"
            "}\n");
}

TEST(IoTest, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const RankTable rho = random_polymatroid(1 + i % 4, 1 + i % 5, rng);
    EXPECT_EQ(parse_polymatroid(serialize_polymatroid(rho)), rho);
  }
}

TEST(IoTest, ParseErrors) {
  const std::vector<std::string> bad = {
      "not json",
      "[]",
      R"({"ground": ["e"], "k": 1})",
      R"({"format": 2, "ground": ["e"], "k": 1, "ranks": {"": 0, "e": 1}})",
      R"({"ground": "e", "k": 1, "ranks": {"": 0, "e": 1}})",
      R"({"ground": [1], "k": 1, "ranks": {"": 0, "e": 1}})",
      R"({"ground": ["e"], "k": "1", "ranks": {"": 0, "e": 1}})",
      R"({"ground": ["e"], "k": 1, "ranks": [0, 1]})",
      R"({"ground": ["e"], "k": 1, "ranks": {"": 0, "x": 1}})",
      R"({"ground": ["e"], "k": 1, "ranks": {"": 0}})",
      R"({"ground": ["e"], "k": 1, "ranks": {"": 0, "e": 1.5}})",
      R"({"ground": ["e", "f"], "k": 1, "ranks": {"": 0, "e": 1, "f": 1, "f,e": 1}})",
  };
  for (const auto& text : bad) {
    EXPECT_EQ(code_of([&] { parse_polymatroid(text); }), ErrorCode::kParseError) << text;
  }
}

TEST(IoTest, AxiomAndLimitErrors) {
  EXPECT_EQ(code_of([] {
              parse_polymatroid(
                  R"({"ground": ["e","f"], "k": 2, "ranks": {"": 0, "e": 1, "f": 1, "e,f": 3}})");
            }),
            ErrorCode::kNotSubmodular);
  EXPECT_EQ(code_of([] {
              parse_polymatroid(R"({"ground": ["e","e"], "k": 1,
                                   "ranks": {"": 0, "e": 1, "e,e": 1}})");
            }),
            ErrorCode::kLabelCollision);
  const Limits saved = limits();
  set_limits({1, saved.max_k, saved.search_budget});
  EXPECT_EQ(code_of([] { parse_polymatroid(kExample); }), ErrorCode::kLimitExceeded);
  set_limits({saved.max_elements, 2, saved.search_budget});
  EXPECT_EQ(code_of([] { parse_polymatroid(kExample); }), ErrorCode::kLimitExceeded);
  set_limits(saved);
}

TEST(IoTest, Catalog) {
  const ClassSpec cls = ClassSpec::make(2, 4, 4);
  const auto records = enumerate_singleton_excluded(cls);
  CatalogMeta meta;
  meta.source = "classified";
  const OrderedJson doc = catalog_to_json(cls, records, meta);
  EXPECT_EQ(doc["format"], 1);
  EXPECT_EQ(doc["class"]["b"], 4);
  EXPECT_FALSE(doc["metadata"].contains("timestamp"));
  ASSERT_EQ(doc["records"].size(), 1u);
  EXPECT_EQ(doc["records"][0]["polymatroid"]["ranks"]["e"], 2);
  EXPECT_EQ(doc["records"][0]["tags"][0], "singleton");
  EXPECT_EQ(catalog_to_json(cls, records, meta).dump(), doc.dump());
  meta.timestamp = "2026-01-01T00:00:00Z";
  EXPECT_EQ(catalog_to_json(cls, records, meta)["metadata"]["timestamp"], *meta.timestamp);
}

TEST(IoTest, Csv) {
  const std::vector<LatticePoint> points = {{0, 1}, {2, 3}};
  EXPECT_EQ(points_to_csv(GroundSet::standard(2), points), "e,f\n0,1\n2,3\n");
}

}  // namespace
}  // namespace pmkit
