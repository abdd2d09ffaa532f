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

#include "rank_table.h"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace pmkit {
namespace {

nlohmann::json witness_json(const GroundSet& g, Subset a, Subset b) {
  return {{"A", g.labels_of(a)}, {"B", g.labels_of(b)}};
}

[[noreturn]] void throw_violation(const GroundSet& g, const AxiomViolation& v) {
  throw Error(v.code, v.message, witness_json(g, v.a, v.b));
}

std::string brace(const GroundSet& g, Subset s) { return "{" + g.key_of(s) + "}"; }

}  // namespace

std::optional<AxiomViolation> RankTable::check(const GroundSet& ground, int64_t k,
                                               std::span<const int64_t> ranks) {
  const int n = ground.size();
  const uint32_t count = uint32_t{1} << n;
  if (ranks.size() != count) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(count) + " ranks, got " +
                    std::to_string(ranks.size()));
  }
  if (k < 0 || k > limits().max_k) {
    throw Error(ErrorCode::kLimitExceeded,
                "k must lie in [0, " + std::to_string(limits().max_k) + "]",
                {{"k", k}});
  }
  if (ranks[0] != 0) {
    return AxiomViolation{ErrorCode::kNotNormalized, Subset(), Subset(),
                          "rank of the empty set is " + std::to_string(ranks[0])};
  }
  for (int e = 0; e < n; ++e) {
    const int64_t r = ranks[Subset::singleton(e).bits()];
    if (r > k) {
      return AxiomViolation{ErrorCode::kExceedsK, Subset::singleton(e), Subset(),
                            "rank of {" + ground.label(e) + "} is " +
                                std::to_string(r) + " > k = " + std::to_string(k)};
    }
  }
  // Single-element steps suffice for monotonicity.
  for (uint32_t b = 1; b < count; ++b) {
    for (int i : Subset(b).members()) {
      const Subset a = Subset(b).without(i);
      if (ranks[a.bits()] > ranks[b]) {
        return AxiomViolation{ErrorCode::kNotMonotone, a, Subset(b),
                              "rank" + brace(ground, a) + " > rank" +
                                  brace(ground, Subset(b))};
      }
    }
  }
  // Local form: rho(S+x) + rho(S+y) >= rho(S+x+y) + rho(S) for x, y outside S.
  // It is equivalent to submodularity for every pair of subsets.
  for (uint32_t s = 0; s < count; ++s) {
    for (int x = 0; x < n; ++x) {
      if ((s >> x) & 1u) continue;
      const uint32_t sx = s | (uint32_t{1} << x);
      for (int y = x + 1; y < n; ++y) {
        if ((s >> y) & 1u) continue;
        const uint32_t sy = s | (uint32_t{1} << y);
        if (ranks[sx] + ranks[sy] < ranks[sx | sy] + ranks[s]) {
          return AxiomViolation{ErrorCode::kNotSubmodular, Subset(sx), Subset(sy),
                                "submodularity fails for A=" + brace(ground, Subset(sx)) +
                                    ", B=" + brace(ground, Subset(sy))};
        }
      }
    }
  }
  return std::nullopt;
}

RankTable RankTable::validate(GroundSet ground, int64_t k, std::vector<int64_t> ranks) {
  if (auto v = check(ground, k, ranks)) throw_violation(ground, *v);
  return RankTable(std::move(ground), k, std::move(ranks));
}

RankTable RankTable::trusted(GroundSet ground, int64_t k, std::vector<int64_t> ranks) {
#ifndef NDEBUG
  if (auto v = check(ground, k, ranks)) throw_violation(ground, *v);
#endif
  return RankTable(std::move(ground), k, std::move(ranks));
}

RankTable RankTable::with_k(int64_t k) const {
  return validate(ground_, k, ranks_);
}

RankTable MaxSepMatroid::to_table() const {
  std::vector<int64_t> ranks(ground.subset_count());
  for (uint32_t s = 0; s < ranks.size(); ++s) ranks[s] = rank(Subset(s));
  return RankTable::trusted(ground, 1, std::move(ranks));
}

RankTable uniform(int64_t a, int64_t b) {
  if (b < 1 || a < 0 || a > b) {
    throw Error(ErrorCode::kInvalidParams,
                "uniform matroid needs 0 <= a <= b and b >= 1",
                {{"a", a}, {"b", b}});
  }
  if (b > kHardMaxElements) {
    throw Error(ErrorCode::kLimitExceeded, "uniform matroid too large", {{"b", b}});
  }
  return uniform(a, GroundSet::standard(static_cast<int>(b)));
}

RankTable uniform(int64_t a, const GroundSet& ground) {
  if (a < 0 || a > ground.size()) {
    throw Error(ErrorCode::kInvalidParams, "uniform rank out of range", {{"a", a}});
  }
  std::vector<int64_t> ranks(ground.subset_count());
  for (uint32_t s = 0; s < ranks.size(); ++s) {
    ranks[s] = std::min<int64_t>(Subset(s).size(), a);
  }
  return RankTable::trusted(ground, 1, std::move(ranks));
}

RankTable minor(const RankTable& rho, Subset contract, Subset del) {
  if (!(contract & del).empty()) {
    throw Error(ErrorCode::kInvalidArgument, "contract and delete sets overlap");
  }
  const Subset full = rho.full();
  if (!(contract | del).is_subset_of(full)) {
    throw Error(ErrorCode::kUnknownElement, "subset outside the ground set");
  }
  const Subset keep = full - contract - del;
  const GroundSet ground = rho.ground().restrict_to(keep);
  const int64_t base = rho.rank(contract);
  std::vector<int64_t> ranks(ground.subset_count());
  for (uint32_t s = 0; s < ranks.size(); ++s) {
    ranks[s] = rho.rank(expand_bits(Subset(s), keep) | contract) - base;
  }
  return RankTable::trusted(ground, rho.k(), std::move(ranks));
}

RankTable delete_set(const RankTable& rho, Subset x) { return minor(rho, Subset(), x); }
RankTable contract_set(const RankTable& rho, Subset x) { return minor(rho, x, Subset()); }
RankTable restrict_to(const RankTable& rho, Subset x) {
  return minor(rho, Subset(), rho.full() - x);
}

RankTable delete_elements(const RankTable& rho, const std::vector<std::string>& labels) {
  return delete_set(rho, rho.ground().subset_of(labels));
}

RankTable contract_elements(const RankTable& rho, const std::vector<std::string>& labels) {
  return contract_set(rho, rho.ground().subset_of(labels));
}

RankTable direct_sum(const RankTable& rho1, const RankTable& rho2) {
  if (rho1.k() != rho2.k()) {
    throw Error(ErrorCode::kMixedK, "direct sum of tables with different k",
                {{"k1", rho1.k()}, {"k2", rho2.k()}});
  }
  std::vector<std::string> labels = rho1.ground().labels();
  for (const auto& l : rho2.ground().labels()) {
    if (rho1.ground().contains(l)) {
      throw Error(ErrorCode::kLabelCollision, "label '" + l + "' appears in both summands",
                  {{"label", l}});
    }
    labels.push_back(l);
  }
  GroundSet ground(std::move(labels));
  const int n1 = rho1.size();
  const uint32_t mask1 = rho1.full().bits();
  std::vector<int64_t> ranks(ground.subset_count());
  for (uint32_t s = 0; s < ranks.size(); ++s) {
    ranks[s] = rho1.rank(Subset(s & mask1)) + rho2.rank(Subset(s >> n1));
  }
  return RankTable::trusted(std::move(ground), rho1.k(), std::move(ranks));
}

RankTable add(const RankTable& rho1, const RankTable& rho2) {
  if (!(rho1.ground() == rho2.ground())) {
    throw Error(ErrorCode::kGroundMismatch, "pointwise sum needs identical ground sets");
  }
  std::vector<int64_t> ranks(rho1.ground().subset_count());
  for (uint32_t s = 0; s < ranks.size(); ++s) {
    ranks[s] = checked_add(rho1.rank(Subset(s)), rho2.rank(Subset(s)));
  }
  return RankTable::trusted(rho1.ground(), checked_add(rho1.k(), rho2.k()), std::move(ranks));
}

RankTable scalar_multiply(int64_t c, const RankTable& rho) {
  if (c < 0) {
    throw Error(ErrorCode::kInvalidArgument, "scalar must be nonnegative", {{"c", c}});
  }
  std::vector<int64_t> ranks(rho.ground().subset_count());
  for (uint32_t s = 0; s < ranks.size(); ++s) ranks[s] = checked_mul(c, rho.rank(Subset(s)));
  return RankTable::trusted(rho.ground(), checked_mul(c, rho.k()), std::move(ranks));
}

RankTable k_dual(const RankTable& rho) {
  const Subset full = rho.full();
  const int64_t total = rho.total_rank();
  std::vector<int64_t> ranks(rho.ground().subset_count());
  for (uint32_t s = 0; s < ranks.size(); ++s) {
    const Subset x(s);
    ranks[s] = checked_add(checked_mul(rho.k(), x.size()), rho.rank(full - x) - total);
  }
  return RankTable::trusted(rho.ground(), rho.k(), std::move(ranks));
}

int64_t nullity(const RankTable& rho) { return rho.size() - rho.total_rank(); }

bool has_loops(const RankTable& rho) {
  for (int e = 0; e < rho.size(); ++e) {
    if (rho.rank_of(e) == 0) return true;
  }
  return false;
}

bool has_parallel_points(const RankTable& rho) {
  for (int e = 0; e < rho.size(); ++e) {
    for (int f = e + 1; f < rho.size(); ++f) {
      if (rho.rank_of(e) == 1 && rho.rank_of(f) == 1 &&
          rho.rank(Subset::singleton(e).with(f)) == 1) {
        return true;
      }
    }
  }
  return false;
}

RankTable simplify(const RankTable& rho) {
  const auto& g = rho.ground();
  Subset keep;
  for (int e = 0; e < rho.size(); ++e) {
    const int64_t r = rho.rank_of(e);
    if (r == 0) continue;
    if (r == 1) {
      // Parallel classes of points are cliques of the pairwise relation, so
      // comparing against every other point of the class is enough.
      bool representative = true;
      for (int f = 0; f < rho.size(); ++f) {
        if (f == e || rho.rank_of(f) != 1) continue;
        if (rho.rank(Subset::singleton(e).with(f)) == 1 && g.label(f) < g.label(e)) {
          representative = false;
          break;
        }
      }
      if (!representative) continue;
    }
    keep = keep.with(e);
  }
  return restrict_to(rho, keep);
}

Subset permute(Subset s, const Permutation& perm) {
  uint32_t out = 0;
  for (int i : s.members()) out |= uint32_t{1} << perm[static_cast<size_t>(i)];
  return Subset(out);
}

CanonicalForm canonical_form(const RankTable& rho) {
  const int n = rho.size();
  Permutation perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best;
  std::vector<int64_t> candidate(rho.ground().subset_count());
  do {
    for (uint32_t s = 0; s < candidate.size(); ++s) {
      candidate[permute(Subset(s), perm).bits()] = rho.rank(Subset(s));
    }
    if (best.ranks.empty() || candidate < best.ranks) {
      best.ranks = candidate;
      best.perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::optional<Permutation> find_isomorphism(const RankTable& rho1, const RankTable& rho2) {
  if (rho1.size() != rho2.size() || rho1.k() != rho2.k()) return std::nullopt;
  Permutation perm(static_cast<size_t>(rho1.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (uint32_t s = 0; s < rho1.ground().subset_count() && ok; ++s) {
      ok = rho2.rank(permute(Subset(s), perm)) == rho1.rank(Subset(s));
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

RankTable doubleton(int64_t k, int64_t rho_e, int64_t rho_f, int64_t m) {
  return RankTable::validate(GroundSet{"e", "f"}, k, {0, rho_e, rho_f, m});
}

RankTable singleton(int64_t k, int64_t rank) {
  return RankTable::validate(GroundSet{"e"}, k, {0, rank});
}

}  // namespace pmkit
