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

// l-compression: freely add l points to e, contract them, delete e. On the
// natural matroid this is contraction of l clones of e and deletion of the
// rest.

#ifndef PMKIT_COMPRESSION_H_
#define PMKIT_COMPRESSION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rank_table.h"
#include "uniform_minors.h"

namespace pmkit {

struct CompressionStep {
  std::string element;
  int64_t level = 0;
};

// (rho compressed at e by l)(A) = R(k 1_A + l 1_e) - R(l 1_e) for A in E - e.
// l = 0 gives deletion, l >= rho({e}) gives contraction.
// Throws kUnknownElement, kLevelOutOfRange (l < 0 or l > k).
RankTable compress(const RankTable& rho, int element, int64_t level);
RankTable compress(const RankTable& rho, const std::string& element, int64_t level);

// Every internal compression (1 <= l <= rho({e}) - 1) lies in the class.
// Throws kNotExcludedMinor.
bool is_in_gamma(const RankTable& rho, const ClassSpec& cls);

struct ChainLink {
  CompressionStep step;
  RankTable result;
};

// Repeatedly applies the internal compression with the least (label, level)
// that leaves the class, until the current polymatroid lies in Gamma. Every
// intermediate result is checked to be an excluded minor.
// Throws kNotExcludedMinor, kClassificationMismatch.
std::vector<ChainLink> compression_chain(const RankTable& rho, const ClassSpec& cls);

// Every record lying in Gamma has at most b elements.
bool gamma_size_check(const std::vector<ExcludedMinorRecord>& records, const ClassSpec& cls);

}  // namespace pmkit

#endif  // PMKIT_COMPRESSION_H_
