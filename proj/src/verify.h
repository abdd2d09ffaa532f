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

// Acceptance and property checks, grouped into suites:
//   paper       the eleven acceptance criteria
//   properties  algebraic invariants on random and exhaustive samples
//   all         both

#ifndef PMKIT_VERIFY_H_
#define PMKIT_VERIFY_H_

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pmkit {

struct CheckLine {
  std::string name;
  bool pass = false;
  // Informational lines are reported but do not decide the criterion.
  bool informational = false;
  std::string detail;
  nlohmann::json witness;
};

struct CheckResult {
  std::string id;  // "1".."11" for acceptance criteria, "P1".. for properties
  std::string title;
  bool pass = false;
  double seconds = 0;
  std::vector<CheckLine> lines;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
  nlohmann::json to_json() const;
  // One "[PASS]/[FAIL] id title" line per check followed by its sub-lines.
  std::string to_text() const;
};

struct VerifyOptions {
  int jobs = 1;
  // Called after each check completes.
  std::function<void(const CheckResult&)> progress;
};

// Throws Error(kUnknownSuite).
SuiteReport run_suite(const std::string& name, const VerifyOptions& options = {});

// Runs a single acceptance criterion (1..11). Throws kInvalidArgument.
CheckResult run_acceptance_criterion(int id, const VerifyOptions& options = {});

int acceptance_criterion_count();

}  // namespace pmkit

#endif  // PMKIT_VERIFY_H_
