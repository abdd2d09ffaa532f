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

// Integer k-polymatroids stored as explicit rank tables, together with the
// standard operations on them: minors, sums, k-duality, simplification and
// isomorphism.

#ifndef PMKIT_RANK_TABLE_H_
#define PMKIT_RANK_TABLE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.h"
#include "ground_set.h"

namespace pmkit {

// First axiom violation found by RankTable::check, with witness subsets.
struct AxiomViolation {
  ErrorCode code;  // kNotNormalized, kExceedsK, kNotMonotone or kNotSubmodular
  Subset a;
  Subset b;
  std::string message;
};

// A k-polymatroid on a labeled ground set: one rank per subset, indexed by
// bitmask. Immutable once constructed; every instance satisfies the axioms.
class RankTable {
 public:
  // The empty polymatroid with bound k.
  RankTable() = default;

  // Throws Error carrying the first violated axiom and its witnesses.
  static RankTable validate(GroundSet ground, int64_t k, std::vector<int64_t> ranks);

  // Axiom check without constructing. nullopt means the table is a valid
  // k-polymatroid.
  static std::optional<AxiomViolation> check(const GroundSet& ground, int64_t k,
                                             std::span<const int64_t> ranks);

  // Builds from a rank function known to satisfy the axioms (generated or
  // derived by an axiom-preserving construction). Checked in debug builds.
  static RankTable trusted(GroundSet ground, int64_t k, std::vector<int64_t> ranks);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int64_t k() const { return k_; }
  Subset full() const { return ground_.full(); }
  int64_t rank(Subset s) const { return ranks_[s.bits()]; }
  int64_t rank_of(int element) const { return ranks_[Subset::singleton(element).bits()]; }
  int64_t total_rank() const { return ranks_[full().bits()]; }
  std::span<const int64_t> ranks() const { return ranks_; }

  // Same rank function with a different declared bound (must still hold).
  RankTable with_k(int64_t k) const;

  bool operator==(const RankTable&) const = default;

 private:
  RankTable(GroundSet ground, int64_t k, std::vector<int64_t> ranks)
      : ground_(std::move(ground)), k_(k), ranks_(std::move(ranks)) {}

  GroundSet ground_;
  int64_t k_ = 0;
  std::vector<int64_t> ranks_{0};
};

// Direct sum of loops and coloops; r(A) = |A ∩ coloops|.
struct MaxSepMatroid {
  GroundSet ground;
  Subset coloops;

  int64_t rank(Subset a) const { return (a & coloops).size(); }
  RankTable to_table() const;
  bool operator==(const MaxSepMatroid&) const = default;
};

// U_{a,b} on labels e, f, g, ... with k = 1. Throws kInvalidParams.
RankTable uniform(int64_t a, int64_t b);
// U_{a,b} on the given labels.
RankTable uniform(int64_t a, const GroundSet& ground);

// Minors. Throw kUnknownElement for labels outside the ground set.
RankTable delete_set(const RankTable& rho, Subset x);
RankTable contract_set(const RankTable& rho, Subset x);
RankTable delete_elements(const RankTable& rho, const std::vector<std::string>& labels);
RankTable contract_elements(const RankTable& rho, const std::vector<std::string>& labels);
// rho restricted to x (= deletion of the complement).
RankTable restrict_to(const RankTable& rho, Subset x);
// rho / contract \ del, with contract and del disjoint.
RankTable minor(const RankTable& rho, Subset contract, Subset del);

// rho1 ⊕ rho2 on the concatenated ground set. Throws kLabelCollision, kMixedK.
RankTable direct_sum(const RankTable& rho1, const RankTable& rho2);

// Pointwise sum; resulting k is rho1.k + rho2.k. Throws kGroundMismatch.
RankTable add(const RankTable& rho1, const RankTable& rho2);
// Pointwise multiple; resulting k is c * rho.k.
RankTable scalar_multiply(int64_t c, const RankTable& rho);

// rho*(X) = k|X| + rho(E - X) - rho(E).
RankTable k_dual(const RankTable& rho);

// |E| - rho(E); negative for polymatroids of large rank.
int64_t nullity(const RankTable& rho);

// Deletes loops and all but the label-least member of each parallel class of
// points (rank-1 elements e, f with rho({e,f}) = 1).
RankTable simplify(const RankTable& rho);
bool has_loops(const RankTable& rho);
bool has_parallel_points(const RankTable& rho);

// perm[i] = index in the target ground set that element i is sent to.
using Permutation = std::vector<int>;

Subset permute(Subset s, const Permutation& perm);

// Lexicographically least rank vector over all relabelings, and the
// permutation achieving it.
struct CanonicalForm {
  std::vector<int64_t> ranks;
  Permutation perm;
};
CanonicalForm canonical_form(const RankTable& rho);

// A relabeling carrying rho1 onto rho2, if one exists. Requires equal k and
// equal ground-set size.
std::optional<Permutation> find_isomorphism(const RankTable& rho1, const RankTable& rho2);
inline bool is_isomorphic(const RankTable& rho1, const RankTable& rho2) {
  return find_isomorphism(rho1, rho2).has_value();
}

// Convenience for two-element tables on {e, f}.
RankTable doubleton(int64_t k, int64_t rho_e, int64_t rho_f, int64_t m);
RankTable singleton(int64_t k, int64_t rank);

}  // namespace pmkit

#endif  // PMKIT_RANK_TABLE_H_
