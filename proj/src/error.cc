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

#include "error.h"

namespace pmkit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kNotSubmodular: return "NotSubmodular";
    case ErrorCode::kExceedsK: return "ExceedsK";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kLabelCollision: return "LabelCollision";
    case ErrorCode::kMixedK: return "MixedK";
    case ErrorCode::kGroundMismatch: return "GroundMismatch";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kLevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::kOutOfGrid: return "OutOfGrid";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotExcludedMinor: return "NotExcludedMinor";
    case ErrorCode::kKMismatch: return "KMismatch";
    case ErrorCode::kRegimeViolated: return "RegimeViolated";
    case ErrorCode::kNotDecomposable: return "NotDecomposable";
    case ErrorCode::kUniquenessRegimeViolated: return "UniquenessRegimeViolated";
    case ErrorCode::kLevelMismatch: return "LevelMismatch";
    case ErrorCode::kReconstructionFailure: return "ReconstructionFailure";
    case ErrorCode::kMinorNotDecomposable: return "MinorNotDecomposable";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kCollapseFailed: return "CollapseFailed";
    case ErrorCode::kNotInTable: return "NotInTable";
    case ErrorCode::kNonIntegerResult: return "NonIntegerResult";
    case ErrorCode::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kOverlappingSets: return "OverlappingSets";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
    case ErrorCode::kClassificationMismatch: return "ClassificationMismatch";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

nlohmann::json Error::to_json() const {
  return {{"error", std::string(error_code_name(code_))},
          {"message", what()},
          {"detail", detail_}};
}

int64_t checked_add(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in addition");
  }
  return out;
}

int64_t checked_sub(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in subtraction");
  }
  return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in multiplication");
  }
  return out;
}

}  // namespace pmkit
