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

#include "decomposition.h"

#include <algorithm>
#include <variant>

#include "compression.h"
#include "polytope.h"
#include "uniform_minors.h"

namespace pmkit {
namespace {

using Attempt = std::variant<CornerDecomposition, AxiomViolation>;

Attempt try_decompose(const RankTable& rho, int64_t n, Subset coloops) {
  const int64_t shift = rho.k() - n;
  std::vector<int64_t> tau(rho.ground().subset_count());
  for (uint32_t s = 0; s < tau.size(); ++s) {
    tau[s] = rho.rank(Subset(s)) - shift * (Subset(s) & coloops).size();
  }
  if (auto v = RankTable::check(rho.ground(), n, tau)) return *v;
  return CornerDecomposition{n, RankTable::trusted(rho.ground(), n, std::move(tau)),
                             MaxSepMatroid{rho.ground(), coloops}};
}

CornerDecomposition empty_decomposition(int64_t m) {
  return CornerDecomposition{m, RankTable::validate(GroundSet(), m, {0}),
                             MaxSepMatroid{GroundSet(), Subset()}};
}

int label_least(const RankTable& rho) {
  int best = 0;
  for (int i = 1; i < rho.size(); ++i) {
    if (rho.ground().label(i) < rho.ground().label(best)) best = i;
  }
  return best;
}

void require_minor_decompositions(const RankTable& rho, int64_t m) {
  const Subset full = rho.full();
  for (uint32_t s = 1; s <= full.bits(); ++s) {
    const Subset kept(s);
    if (kept.size() > 2) continue;
    const Subset rest = full - kept;
    // Every C within the rest, enumerated as submasks.
    for (uint32_t c = rest.bits();; c = (c - 1) & rest.bits()) {
      const Subset contract(c);
      const RankTable sub = minor(rho, contract, rest - contract);
      const Attempt got = try_decompose(
          sub, m, [&] {
            Subset co;
            for (int i = 0; i < sub.size(); ++i) {
              if (sub.rank_of(i) > m) co = co.with(i);
            }
            return co;
          }());
      if (std::holds_alternative<AxiomViolation>(got)) {
        const auto& v = std::get<AxiomViolation>(got);
        throw Error(ErrorCode::kMinorNotDecomposable,
                    "minor on {" + rho.ground().key_of(kept) + "} after contracting {" +
                        rho.ground().key_of(contract) + "} has no " + std::to_string(m) +
                        "-corner decomposition: " + v.message,
                    {{"restrict", rho.ground().labels_of(kept)},
                     {"contract", rho.ground().labels_of(contract)},
                     {"ranks", std::vector<int64_t>(sub.ranks().begin(), sub.ranks().end())}});
      }
      if (c == 0) break;
    }
  }
}

CornerDecomposition glue_recursive(const RankTable& rho, int64_t m) {
  if (rho.size() == 0) return empty_decomposition(m);
  if (rho.size() == 1) return corner_decompose(rho, m);
  const int e = label_least(rho);
  const Subset s = Subset::singleton(e);
  return glue_decomposition(rho, e, glue_recursive(delete_set(rho, s), m),
                            glue_recursive(contract_set(rho, s), m),
                            corner_decompose(restrict_to(rho, s), m));
}

}  // namespace

RankTable CornerDecomposition::reconstruct(int64_t k) const {
  std::vector<int64_t> ranks(tau.ground().subset_count());
  const int64_t shift = checked_sub(k, n);
  for (uint32_t s = 0; s < ranks.size(); ++s) {
    ranks[s] = checked_add(tau.rank(Subset(s)), checked_mul(shift, r.rank(Subset(s))));
  }
  return RankTable::validate(tau.ground(), k, std::move(ranks));
}

CornerRegion CornerRegion::of(const CornerDecomposition& d, int64_t k) {
  CornerRegion region{d.n, CountVector(static_cast<size_t>(d.tau.size()), 0)};
  for (int i = 0; i < d.tau.size(); ++i) {
    region.anchor[static_cast<size_t>(i)] = d.r.coloops.contains(i) ? k - d.n : 0;
  }
  return region;
}

bool CornerRegion::contains(std::span<const int64_t> point) const {
  if (point.size() != anchor.size()) return false;
  for (size_t i = 0; i < point.size(); ++i) {
    if (point[i] < anchor[i] || point[i] > anchor[i] + n) return false;
  }
  return true;
}

CornerDecomposition corner_decompose(const RankTable& rho, int64_t n) {
  if (n < 0) throw Error(ErrorCode::kInvalidParams, "level must be nonnegative", {{"n", n}});
  if (2 * n + 1 > rho.k()) {
    throw Error(ErrorCode::kUniquenessRegimeViolated,
                "2n + 1 > k; use the exhaustive search",
                {{"n", n}, {"k", rho.k()}});
  }
  Subset coloops;
  for (int i = 0; i < rho.size(); ++i) {
    if (rho.rank_of(i) > n) coloops = coloops.with(i);
  }
  Attempt got = try_decompose(rho, n, coloops);
  if (auto* v = std::get_if<AxiomViolation>(&got)) {
    throw Error(ErrorCode::kNotDecomposable,
                "no " + std::to_string(n) + "-corner decomposition: " + v->message,
                {{"n", n},
                 {"axiom", error_code_name(v->code)},
                 {"A", rho.ground().labels_of(v->a)},
                 {"B", rho.ground().labels_of(v->b)}});
  }
  return std::get<CornerDecomposition>(std::move(got));
}

std::vector<CornerDecomposition> corner_decompose_exhaustive(const RankTable& rho, int64_t n) {
  if (n < 0 || n > rho.k()) {
    throw Error(ErrorCode::kInvalidParams, "level must lie in [0, k]",
                {{"n", n}, {"k", rho.k()}});
  }
  std::vector<CornerDecomposition> out;
  for (uint32_t c = 0; c <= rho.full().bits(); ++c) {
    Attempt got = try_decompose(rho, n, Subset(c));
    if (auto* d = std::get_if<CornerDecomposition>(&got)) out.push_back(std::move(*d));
  }
  return out;
}

CornerDecomposition essential_bound(const RankTable& rho) {
  for (int64_t n = 0; n <= rho.k(); ++n) {
    if (2 * n + 1 <= rho.k()) {
      Subset coloops;
      for (int i = 0; i < rho.size(); ++i) {
        if (rho.rank_of(i) > n) coloops = coloops.with(i);
      }
      Attempt got = try_decompose(rho, n, coloops);
      if (auto* d = std::get_if<CornerDecomposition>(&got)) return std::move(*d);
    } else {
      auto all = corner_decompose_exhaustive(rho, n);
      if (!all.empty()) return std::move(all.front());
    }
  }
  throw Error(ErrorCode::kInternal, "no decomposition at n = k");
}

CornerDecomposition glue_decomposition(const RankTable& rho, int element,
                                       const CornerDecomposition& del,
                                       const CornerDecomposition& cont,
                                       const CornerDecomposition& res) {
  if (del.n != cont.n || del.n != res.n) {
    throw Error(ErrorCode::kLevelMismatch, "decompositions have different levels",
                {{"delete", del.n}, {"contract", cont.n}, {"restrict", res.n}});
  }
  const int64_t m = del.n;
  if (rho.k() < 3 * m + 1) {
    throw Error(ErrorCode::kRegimeViolated, "gluing needs k >= 3m + 1",
                {{"m", m}, {"k", rho.k()}});
  }
  if (element < 0 || element >= rho.size()) {
    throw Error(ErrorCode::kUnknownElement, "element index out of range");
  }
  const Subset rest = rho.full().without(element);
  const GroundSet rest_ground = rho.ground().restrict_to(rest);
  const GroundSet e_ground = rho.ground().restrict_to(Subset::singleton(element));
  if (del.tau.ground() != rest_ground || cont.tau.ground() != rest_ground ||
      res.tau.ground() != e_ground) {
    throw Error(ErrorCode::kGroundMismatch, "decomposition ground sets do not match the minors");
  }

  std::vector<int64_t> tau(rho.ground().subset_count());
  std::vector<int64_t> r(rho.ground().subset_count());
  const int64_t tau_e = res.tau.rank_of(0);
  const int64_t r_e = res.r.rank(Subset::singleton(0));
  for (uint32_t s = 0; s < tau.size(); ++s) {
    const Subset a(s);
    const Subset packed = compress_bits(a - Subset::singleton(element), rest);
    if (!a.contains(element)) {
      tau[s] = del.tau.rank(packed);
      r[s] = del.r.rank(packed);
    } else {
      tau[s] = tau_e + cont.tau.rank(packed);
      r[s] = r_e + cont.r.rank(packed);
    }
  }

  Subset coloops;
  for (int i = 0; i < rho.size(); ++i) {
    if (r[Subset::singleton(i).bits()] == 1) coloops = coloops.with(i);
  }
  const MaxSepMatroid sep{rho.ground(), coloops};
  for (uint32_t s = 0; s < r.size(); ++s) {
    if (r[s] != sep.rank(Subset(s))) {
      throw Error(ErrorCode::kReconstructionFailure,
                  "glued r is not a direct sum of loops and coloops",
                  {{"subset", rho.ground().labels_of(Subset(s))}});
    }
  }
  if (auto v = RankTable::check(rho.ground(), m, tau)) {
    throw Error(ErrorCode::kReconstructionFailure,
                "glued tau is not an " + std::to_string(m) + "-polymatroid: " + v->message,
                {{"A", rho.ground().labels_of(v->a)}, {"B", rho.ground().labels_of(v->b)}});
  }
  CornerDecomposition out{m, RankTable::trusted(rho.ground(), m, std::move(tau)), sep};
  if (out.reconstruct(rho.k()) != rho) {
    throw Error(ErrorCode::kReconstructionFailure, "glued decomposition does not sum to rho");
  }
  return out;
}

CornerDecomposition decompose_via_minors(const RankTable& rho, int64_t m) {
  if (m < 0 || rho.k() < 3 * m + 1) {
    throw Error(ErrorCode::kRegimeViolated, "decomposition via minors needs k >= 3m + 1",
                {{"m", m}, {"k", rho.k()}});
  }
  require_minor_decompositions(rho, m);
  return glue_recursive(rho, m);
}

const char* collapse_tag_name(CollapseTag tag) {
  return tag == CollapseTag::kDeletion ? "deletion" : "contraction";
}

CollapseResult compression_collapse(const RankTable& rho, int element, int64_t level) {
  const int64_t m = essential_bound(rho).n;
  if (level < m || level > rho.k() - m) {
    throw Error(ErrorCode::kHypothesisViolated,
                "level must lie in [m, k - m] for the essential bound m",
                {{"level", level}, {"m", m}, {"k", rho.k()}});
  }
  const RankTable got = compress(rho, element, level);
  const Subset s = Subset::singleton(element);
  CollapseResult out;
  out.m = m;
  out.equals_deletion = got == delete_set(rho, s);
  out.equals_contraction = got == contract_set(rho, s);
  out.tag = level >= rho.rank_of(element) ? CollapseTag::kContraction : CollapseTag::kDeletion;
  const bool matches =
      out.tag == CollapseTag::kContraction ? out.equals_contraction : out.equals_deletion;
  if (!matches) {
    throw Error(ErrorCode::kCollapseFailed,
                "compression is not the predicted " + std::string(collapse_tag_name(out.tag)),
                {{"element", rho.ground().label(element)},
                 {"level", level},
                 {"m", m},
                 {"equals_deletion", out.equals_deletion},
                 {"equals_contraction", out.equals_contraction}});
  }
  return out;
}

std::vector<CollapseRow> collapse_report(const RankTable& rho) {
  const int64_t m = essential_bound(rho).n;
  std::vector<CollapseRow> rows;
  for (int e = 0; e < rho.size(); ++e) {
    for (int64_t l = m; l <= rho.k() - m; ++l) {
      rows.push_back({rho.ground().label(e), l, compression_collapse(rho, e, l).tag});
    }
  }
  return rows;
}

bool corner_confinement(const RankTable& rho, const CornerDecomposition& d) {
  const CornerRegion region = CornerRegion::of(d, rho.k());
  const auto points = lattice_points(rho, true);
  return std::all_of(points.begin(), points.end(),
                     [&](const LatticePoint& p) { return region.contains(p); });
}

CornerDecomposition doubleton_canonical_tau(int64_t rho_e, int64_t rho_f, int64_t m, int64_t a,
                                            int64_t k) {
  const auto rows = classify_doubleton(a, k, rho_e, rho_f, m);
  const bool listed = std::any_of(rows.begin(), rows.end(),
                                  [](int row) { return row == 1 || row == 2 || row == 4; });
  if (!listed || a < 1) {
    throw Error(ErrorCode::kNotInTable, "doubleton is not in the in-class table",
                {{"rho_e", rho_e}, {"rho_f", rho_f}, {"m", m}, {"a", a}, {"k", k}});
  }
  const int64_t n = a - 1;
  const int64_t shift = k - n;
  const int64_t r_e = rho_e > n ? 1 : 0;
  const int64_t r_f = rho_f > n ? 1 : 0;
  const int64_t t_e = rho_e - shift * r_e;
  const int64_t t_f = rho_f - shift * r_f;
  const int64_t beta = rho_e + rho_f - m;
  const GroundSet ground = GroundSet::standard(2);
  // beta U_{1,2} plus the direct sum of the remaining singleton mass.
  std::vector<int64_t> tau = {0, beta + (t_e - beta), beta + (t_f - beta),
                              beta + (t_e - beta) + (t_f - beta)};
  if (auto v = RankTable::check(ground, n, tau)) {
    throw Error(ErrorCode::kReconstructionFailure, "tau is not valid: " + v->message);
  }
  Subset coloops;
  if (r_e) coloops = coloops.with(0);
  if (r_f) coloops = coloops.with(1);
  CornerDecomposition out{n, RankTable::trusted(ground, n, std::move(tau)),
                          MaxSepMatroid{ground, coloops}};
  if (out.reconstruct(k) != doubleton(k, rho_e, rho_f, m)) {
    throw Error(ErrorCode::kReconstructionFailure, "decomposition does not sum to the doubleton");
  }
  return out;
}

}  // namespace pmkit
