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

// File formats. Every document carries "format": 1.
//
// Polymatroid:
//   {"format": 1, "ground": ["e","f"], "k": 3,
//    "ranks": {"": 0, "e": 3, "f": 2, "e,f": 4}}
// Rank keys are comma-joined labels in ground order, one per subset.

#ifndef PMKIT_IO_H_
#define PMKIT_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "decomposition.h"
#include "json.hpp"
#include "polytope.h"
#include "rank_table.h"
#include "uniform_minors.h"

namespace pmkit {

using OrderedJson = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// Throws kParseError for malformed documents, kLimitExceeded for ground sets
// beyond the configured maximum, and the axiom errors of RankTable::validate.
RankTable parse_polymatroid(const std::string& text);
RankTable polymatroid_from_json(const nlohmann::json& doc);

OrderedJson polymatroid_to_json(const RankTable& rho);
std::string serialize_polymatroid(const RankTable& rho);

OrderedJson witness_to_json(const MinorWitness& w, const GroundSet& ground);
OrderedJson decomposition_to_json(const CornerDecomposition& d);

struct CatalogMeta {
  int max_elements = 2;
  uint64_t budget = 0;
  std::string source;                   // "classified" or "search"
  std::optional<std::string> timestamp;  // omitted unless requested
};

OrderedJson catalog_to_json(const ClassSpec& cls, const std::vector<ExcludedMinorRecord>& records,
                            const CatalogMeta& meta);

// One point per row, coordinates comma-separated, with a header of labels.
std::string points_to_csv(const GroundSet& ground, const std::vector<LatticePoint>& points);

}  // namespace pmkit

#endif  // PMKIT_IO_H_
