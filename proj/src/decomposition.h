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

// n-corner decompositions rho = tau + (k - n) r, with tau an n-polymatroid and
// r a direct sum of loops and coloops.

#ifndef PMKIT_DECOMPOSITION_H_
#define PMKIT_DECOMPOSITION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "natural.h"
#include "rank_table.h"

namespace pmkit {

struct CornerDecomposition {
  int64_t n = 0;
  RankTable tau;  // declared bound n
  MaxSepMatroid r;

  // tau + (k - n) r as a k-polymatroid.
  RankTable reconstruct(int64_t k) const;
  bool operator==(const CornerDecomposition&) const = default;
};

// The product of intervals [anchor_e, anchor_e + n].
struct CornerRegion {
  int64_t n = 0;
  CountVector anchor;

  static CornerRegion of(const CornerDecomposition& d, int64_t k);
  bool contains(std::span<const int64_t> point) const;
};

// Coloops are the elements with rho({e}) > n. Throws kInvalidParams for
// n < 0, kUniquenessRegimeViolated if 2n + 1 > k, and kNotDecomposable (with
// the failing axiom of tau) otherwise.
CornerDecomposition corner_decompose(const RankTable& rho, int64_t n);

// Tries every coloop set in increasing bitmask order. Throws kInvalidParams
// unless 0 <= n <= k.
std::vector<CornerDecomposition> corner_decompose_exhaustive(const RankTable& rho, int64_t n);

// Least n with an n-corner decomposition, and that decomposition (the least
// coloop bitmask when several exist).
CornerDecomposition essential_bound(const RankTable& rho);

// Combines decompositions of rho \ e, rho / e and rho | {e} at a common level m:
// phi(A) = phi_del(A) for e not in A, phi_res({e}) + phi_cont(A - e) otherwise,
// for both tau and r. Throws kLevelMismatch, kRegimeViolated (k < 3m + 1),
// kGroundMismatch and kReconstructionFailure.
CornerDecomposition glue_decomposition(const RankTable& rho, int element,
                                       const CornerDecomposition& del,
                                       const CornerDecomposition& cont,
                                       const CornerDecomposition& res);

// Decomposes every singleton and doubleton minor, then builds the
// decomposition of rho by gluing on the label-least element recursively.
// Throws kRegimeViolated, kMinorNotDecomposable (naming the minor).
CornerDecomposition decompose_via_minors(const RankTable& rho, int64_t m);

enum class CollapseTag { kDeletion, kContraction };
const char* collapse_tag_name(CollapseTag tag);

struct CollapseResult {
  CollapseTag tag;
  int64_t m = 0;
  bool equals_deletion = false;
  bool equals_contraction = false;
};

// With m the essential bound of rho and m <= l <= k - m, compressing e at
// level l equals rho / e when l >= rho({e}) and rho \ e otherwise.
// Throws kHypothesisViolated, kCollapseFailed.
CollapseResult compression_collapse(const RankTable& rho, int element, int64_t level);

struct CollapseRow {
  std::string element;
  int64_t level = 0;
  CollapseTag tag;
};
// Every (e, l) with m <= l <= k - m, by element then level.
std::vector<CollapseRow> collapse_report(const RankTable& rho);

// Every lattice point of B_rho lies in the corner region of d.
bool corner_confinement(const RankTable& rho, const CornerDecomposition& d);

// The (a-1)-corner decomposition of an in-class doubleton:
//   tau = bt U_{1,2} + ((te - bt) U_{1,1} + (tf - bt) U_{1,1}),
// with bt = rho_e + rho_f - m, r read off the singleton ranks, and te, tf the
// singleton values of tau. Throws kNotInTable.
CornerDecomposition doubleton_canonical_tau(int64_t rho_e, int64_t rho_f, int64_t m, int64_t a,
                                            int64_t k);

}  // namespace pmkit

#endif  // PMKIT_DECOMPOSITION_H_
