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

#ifndef PMKIT_ERROR_H_
#define PMKIT_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace pmkit {

// Every domain rejection the library can raise. The numeric values are part
// of the C ABI (see pmkit_status in pmkit.h) and must not be reordered.
enum class ErrorCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kParseError = 2,
  kNotNormalized = 3,
  kNotMonotone = 4,
  kNotSubmodular = 5,
  kExceedsK = 6,
  kInvalidParams = 7,
  kUnknownElement = 8,
  kLabelCollision = 9,
  kMixedK = 10,
  kGroundMismatch = 11,
  kOverflow = 12,
  kLimitExceeded = 13,
  kLevelOutOfRange = 14,
  kOutOfGrid = 15,
  kTooLarge = 16,
  kNotExcludedMinor = 17,
  kKMismatch = 18,
  kRegimeViolated = 19,
  kNotDecomposable = 20,
  kUniquenessRegimeViolated = 21,
  kLevelMismatch = 22,
  kReconstructionFailure = 23,
  kMinorNotDecomposable = 24,
  kHypothesisViolated = 25,
  kCollapseFailed = 26,
  kNotInTable = 27,
  kNonIntegerResult = 28,
  kSearchBudgetExceeded = 29,
  kDimensionMismatch = 30,
  kOverlappingSets = 31,
  kUnknownSuite = 32,
  kClassificationMismatch = 33,
  kInternal = 34,
};

std::string_view error_code_name(ErrorCode code);

// Structured domain error. `detail` carries witnesses (subsets, labels,
// levels) so that callers can report exactly what failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        nlohmann::json detail = nlohmann::json::object())
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const nlohmann::json& detail() const { return detail_; }

  // {"error": <name>, "message": ..., "detail": {...}}
  nlohmann::json to_json() const;

 private:
  ErrorCode code_;
  nlohmann::json detail_;
};

// Checked 64-bit arithmetic; throws Error(kOverflow).
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

}  // namespace pmkit

#endif  // PMKIT_ERROR_H_
