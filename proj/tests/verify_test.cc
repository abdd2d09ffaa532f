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


#include "verify.h"

#include <gtest/gtest.h>

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

TEST(VerifyTest, Errors) {
  EXPECT_EQ(code_of([] { run_suite("nonsense"); }), ErrorCode::kUnknownSuite);
  EXPECT_EQ(code_of([] { run_acceptance_criterion(0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { run_acceptance_criterion(acceptance_criterion_count() + 1); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(acceptance_criterion_count(), 11);
}

TEST(VerifyTest, FirstCriterionPasses) {
  const CheckResult r = run_acceptance_criterion(1);
  EXPECT_EQ(r.id, "1");
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.lines.empty());
}

TEST(VerifyTest, PropertiesSuite) {
  int progress = 0;
  VerifyOptions options;
  options.progress = [&](const CheckResult&) { ++progress; };
  const SuiteReport report = run_suite("properties", options);
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(progress, static_cast<int>(report.checks.size()));
  const nlohmann::json doc = report.to_json();
  EXPECT_EQ(doc["suite"], "properties");
  EXPECT_EQ(doc["pass"], true);
  const std::string text = report.to_text();
  EXPECT_NE(text.find("[PASS] P1"), std::string::npos);
  EXPECT_EQ(text.find("[FAIL]"), std::string::npos);
}

}  // namespace
}  // namespace pmkit
