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

#include "uniform_minors.h"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "enumerate.h"

namespace pmkit {
namespace {

// Flat view of a filled grid with per-coordinate strides.
class GridSearch {
 public:
  explicit GridSearch(const MultisetRankGrid& grid)
      : n_(static_cast<size_t>(grid.polymatroid().size())), k_(grid.k()) {
    grid.fill();
    values_.resize(grid.point_count());
    for (size_t i = 0; i < values_.size(); ++i) values_[i] = grid.at_index(i);
    stride_.assign(n_, 1);
    size_t s = 1;
    for (size_t i = n_; i-- > 0;) {
      stride_[i] = s;
      s *= static_cast<size_t>(k_ + 1);
    }
  }

  std::optional<MinorWitness> find(int64_t a0, int64_t b0, bool prune) {
    a0_ = a0;
    b0_ = b0;
    const int64_t r_full = values_.back();
    c_.assign(n_, 0);
    w_.assign(n_, 0);
    for (size_t idx = 0; idx < values_.size(); ++idx) {
      size_t rem = idx;
      int64_t free = 0;
      for (size_t i = 0; i < n_; ++i) {
        c_[i] = static_cast<int64_t>(rem / stride_[i]);
        rem %= stride_[i];
        free += k_ - c_[i];
      }
      if (free < b0) continue;
      base_ = idx;
      rc_ = values_[idx];
      if (prune) {
        const int64_t rank_left = r_full - rc_;
        if (rank_left < a0 || free - rank_left < b0 - a0) continue;
      }
      if (keep_search(0, b0)) {
        return MinorWitness{c_, w_, a0, b0};
      }
    }
    return std::nullopt;
  }

 private:
  // Distributes `left` kept clones over coordinates i.. and tests each keep
  // vector.
  bool keep_search(size_t i, int64_t left) {
    if (i + 1 == n_ || n_ == 0) {
      if (n_ == 0) return left == 0 && accept();
      if (left > k_ - c_[i]) return false;
      w_[i] = left;
      const bool ok = accept();
      w_[i] = 0;
      return ok;
    }
    for (int64_t v = 0; v <= std::min(left, k_ - c_[i]); ++v) {
      w_[i] = v;
      if (keep_search(i + 1, left - v)) return true;
    }
    w_[i] = 0;
    return false;
  }

  bool accept() {
    size_t idx = base_;
    for (size_t i = 0; i < n_; ++i) idx += static_cast<size_t>(w_[i]) * stride_[i];
    if (values_[idx] - rc_ != a0_) return false;
    return every_small_subset_independent(0, a0_, base_);
  }

  // Every y <= w with sum(y) = a0 has R(c + y) - R(c) = a0.
  bool every_small_subset_independent(size_t i, int64_t left, size_t idx) {
    if (i == n_) return left != 0 || values_[idx] - rc_ == a0_;
    for (int64_t v = 0; v <= std::min(left, w_[i]); ++v) {
      if (!every_small_subset_independent(i + 1, left - v,
                                          idx + static_cast<size_t>(v) * stride_[i])) {
        return false;
      }
    }
    return true;
  }

  size_t n_;
  int64_t k_;
  std::vector<int64_t> values_;
  std::vector<size_t> stride_;
  CountVector c_, w_;
  int64_t a0_ = 0, b0_ = 0, rc_ = 0;
  size_t base_ = 0;
};

void check_k(const RankTable& rho, const ClassSpec& cls) {
  if (rho.k() != cls.k) {
    throw Error(ErrorCode::kKMismatch,
                "polymatroid has k = " + std::to_string(rho.k()) + ", class has k = " +
                    std::to_string(cls.k),
                {{"polymatroid_k", rho.k()}, {"class_k", cls.k}});
  }
}

bool in_class_grid(const MultisetRankGrid& grid, const ClassSpec& cls) {
  GridSearch search(grid);
  return !search.find(cls.a, cls.b, true) && !search.find(cls.b - cls.a, cls.b, true);
}

bool in_class_unchecked(const RankTable& rho, const ClassSpec& cls) {
  return in_class_grid(MultisetRankGrid(rho), cls);
}

void require_regime(const ClassSpec& cls) {
  if (cls.b < 2 * cls.a || !cls.classification_regime()) {
    throw Error(ErrorCode::kRegimeViolated,
                "classification needs b >= 2a and k >= 2(b - a)",
                {{"a", cls.a}, {"b", cls.b}, {"k", cls.k}});
  }
}

void verify_or_throw(const RankTable& rho, const ClassSpec& cls, const std::string& tag) {
  if (!is_excluded_minor(rho, cls)) {
    throw Error(ErrorCode::kClassificationMismatch,
                tag + " is not an excluded minor under direct detection",
                {{"tag", tag}, {"ranks", std::vector<int64_t>(rho.ranks().begin(),
                                                               rho.ranks().end())}});
  }
}

bool by_size_then_canonical(const ExcludedMinorRecord& x, const ExcludedMinorRecord& y) {
  if (x.polymatroid.size() != y.polymatroid.size()) {
    return x.polymatroid.size() < y.polymatroid.size();
  }
  return x.canonical < y.canonical;
}

// Class membership of a polymatroid keyed by its rank vector; element labels
// never affect membership.
class MembershipCache {
 public:
  explicit MembershipCache(const ClassSpec& cls) : cls_(cls) {}

  bool in_class(const RankTable& rho) {
    std::vector<int64_t> key(rho.ranks().begin(), rho.ranks().end());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const bool v = in_class_unchecked(rho, cls_);
    cache_.emplace(std::move(key), v);
    return v;
  }

 private:
  ClassSpec cls_;
  std::map<std::vector<int64_t>, bool> cache_;
};

bool excluded_with_cache(const RankTable& rho, MembershipCache& cache) {
  for (int e = 0; e < rho.size(); ++e) {
    const Subset s = Subset::singleton(e);
    if (!cache.in_class(delete_set(rho, s))) return false;
    if (!cache.in_class(contract_set(rho, s))) return false;
  }
  return !cache.in_class(rho);
}

RankTable canonical_table(const RankTable& rho) {
  CanonicalForm cf = canonical_form(rho);
  return RankTable::trusted(GroundSet::standard(rho.size()), rho.k(), std::move(cf.ranks));
}

}  // namespace

ClassSpec ClassSpec::make(int64_t a, int64_t b, int64_t k) {
  if (a < 1 || b < 2 * a || k < 1) {
    throw Error(ErrorCode::kInvalidParams, "class needs a >= 1, b >= 2a and k >= 1",
                {{"a", a}, {"b", b}, {"k", k}});
  }
  return ClassSpec{a, b, k};
}

std::optional<MinorWitness> has_uniform_minor(const MultisetRankGrid& grid, int64_t a0,
                                              int64_t b0, bool prune) {
  if (a0 < 0 || b0 < a0) {
    throw Error(ErrorCode::kInvalidParams, "uniform minor needs 0 <= a <= b",
                {{"a", a0}, {"b", b0}});
  }
  return GridSearch(grid).find(a0, b0, prune);
}

std::optional<MinorWitness> has_uniform_minor(const RankTable& rho, int64_t a0, int64_t b0,
                                              bool prune) {
  return has_uniform_minor(MultisetRankGrid(rho), a0, b0, prune);
}

bool nullity_prune(const RankTable& rho, const CountVector& c, const ClassSpec& cls) {
  check_in_grid(rho, c);
  CountVector all(c.size(), rho.k());
  const int64_t rank_left = multiset_rank(rho, all) - multiset_rank(rho, c);
  int64_t free = 0;
  for (int64_t v : c) free += rho.k() - v;
  return rank_left >= cls.a && free - rank_left >= cls.a;
}

bool in_class(const RankTable& rho, const ClassSpec& cls) {
  check_k(rho, cls);
  return in_class_unchecked(rho, cls);
}

std::vector<MinorWitness> class_witnesses(const RankTable& rho, const ClassSpec& cls) {
  check_k(rho, cls);
  MultisetRankGrid grid(rho);
  GridSearch search(grid);
  std::vector<MinorWitness> out;
  if (auto w = search.find(cls.a, cls.b, true)) out.push_back(*w);
  if (auto w = search.find(cls.b - cls.a, cls.b, true)) out.push_back(*w);
  return out;
}

bool is_excluded_minor(const RankTable& rho, const ClassSpec& cls) {
  check_k(rho, cls);
  MembershipCache cache(cls);
  return excluded_with_cache(rho, cache);
}

ExcludedMinorRecord make_record(const RankTable& rho, const ClassSpec& cls) {
  ExcludedMinorRecord rec;
  rec.polymatroid = rho;
  rec.canonical = canonical_form(rho).ranks;
  if (rho.size() == 1) {
    rec.tags = {"singleton", "Ex^" + std::to_string(rho.rank_of(0))};
  } else if (rho.size() == 2) {
    const int64_t x = std::min(rho.rank_of(0), rho.rank_of(1));
    const int64_t y = std::max(rho.rank_of(0), rho.rank_of(1));
    rec.tags = {"doubleton", "Ex_(" + std::to_string(x) + "," + std::to_string(y) + ")^" +
                                 std::to_string(rho.total_rank())};
  } else {
    rec.tags = {"other"};
  }
  rec.witnesses = class_witnesses(rho, cls);
  return rec;
}

std::vector<ExcludedMinorRecord> enumerate_singleton_excluded(const ClassSpec& cls) {
  require_regime(cls);
  std::vector<ExcludedMinorRecord> out;
  for (int64_t m = cls.a; m <= cls.k - cls.a; ++m) {
    const RankTable rho = singleton(cls.k, m);
    verify_or_throw(rho, cls, "Ex^" + std::to_string(m));
    out.push_back(make_record(rho, cls));
  }
  std::sort(out.begin(), out.end(), by_size_then_canonical);
  return out;
}

std::vector<ExcludedMinorRecord> enumerate_doubleton_excluded(const ClassSpec& cls) {
  require_regime(cls);
  const int64_t k = cls.k;
  std::vector<ExcludedMinorRecord> out;
  for (int64_t re = 0; re <= k; ++re) {
    for (int64_t rf = re; rf <= k; ++rf) {
      for (int64_t m = rf; m <= re + rf; ++m) {
        const RankTable rho = doubleton(k, re, rf, m);
        if (is_excluded_minor(rho, cls)) out.push_back(make_record(rho, cls));
      }
    }
  }
  std::sort(out.begin(), out.end(), by_size_then_canonical);
  return out;
}

std::string excluded_minor_obstruction(const RankTable& rho, const ClassSpec& cls) {
  if (in_class(rho, cls)) return "in class";
  for (int e = 0; e < rho.size(); ++e) {
    const Subset s = Subset::singleton(e);
    if (!in_class(delete_set(rho, s), cls)) return "delete " + rho.ground().label(e);
    if (!in_class(contract_set(rho, s), cls)) return "contract " + rho.ground().label(e);
  }
  return "";
}

DoubletonTableAudit audit_doubleton_table(const ClassSpec& cls) {
  require_regime(cls);
  const int64_t a = cls.a, k = cls.k;
  DoubletonTableAudit audit;
  for (int64_t re = 0; re <= k; ++re) {
    for (int64_t rf = re; rf <= k; ++rf) {
      for (int64_t m = rf; m <= re + rf; ++m) {
        const auto rows = classify_doubleton(a, k, re, rf, m);
        const bool listed = std::any_of(rows.begin(), rows.end(),
                                        [](int r) { return r == 3 || r == 5; });
        const RankTable rho = doubleton(k, re, rf, m);
        const std::string obstruction = excluded_minor_obstruction(rho, cls);
        DoubletonAuditEntry entry{re, rf, m, rows, obstruction.empty(), obstruction};
        if (listed) audit.listed.push_back(entry);
        if (listed && !entry.excluded) audit.rejected.push_back(entry);
        if (!listed && entry.excluded) audit.unlisted.push_back(entry);
      }
    }
  }
  return audit;
}

std::vector<int> classify_doubleton(int64_t a, int64_t k, int64_t rho_e, int64_t rho_f,
                                    int64_t m) {
  const int64_t re = std::min(rho_e, rho_f), rf = std::max(rho_e, rho_f);
  auto in = [](int64_t v, int64_t lo, int64_t hi) { return lo <= v && v <= hi; };
  const bool e_low = in(re, 0, a - 1), f_low = in(rf, 0, a - 1);
  const bool e_high = in(re, k - a + 1, k), f_high = in(rf, k - a + 1, k);
  std::vector<int> rows;
  if (e_low && f_low && in(m, rf, re + rf)) rows.push_back(1);
  if (e_low && f_high && in(m, re + k - a + 1, re + rf)) rows.push_back(2);
  if (in(re, 1, a - 1) && f_high && in(m, rf, re + k - a)) rows.push_back(3);
  if (e_high && f_high && in(m, rf + k - a + 1, re + rf)) rows.push_back(4);
  if (e_high && f_high && in(m, rf, rf + k - a)) rows.push_back(5);
  if (in(rf, a, k - a)) rows.push_back(6);
  if (in(re, a, k - a)) rows.push_back(7);
  return rows;
}

int64_t count_formula(int64_t a, int64_t k) {
  const int64_t inner =
      checked_add(checked_add(checked_sub(checked_mul(3, checked_mul(a, k)),
                                          checked_mul(2, checked_mul(a, a))),
                              checked_mul(3, k)),
                  2);
  const int64_t num = checked_mul(a, inner);
  if (num % 6 != 0) {
    throw Error(ErrorCode::kNonIntegerResult, "doubleton count is not an integer",
                {{"a", a}, {"k", k}, {"numerator", num}});
  }
  return num / 6;
}

std::vector<ExcludedMinorRecord> search_excluded(const ClassSpec& cls,
                                                 const SearchOptions& options,
                                                 SearchStats* stats) {
  if (options.max_elements < 0 || (options.max_elements > 3 && !options.allow_large)) {
    throw Error(ErrorCode::kInvalidParams,
                "searching beyond 3 elements needs an explicit override",
                {{"max_elements", options.max_elements}});
  }
  std::map<std::vector<int64_t>, RankTable> found;
  SearchStats total;
  for (int n = 0; n <= options.max_elements; ++n) {
    const int jobs = std::max(1, n == 0 ? 1 : options.jobs);
    std::vector<std::map<std::vector<int64_t>, RankTable>> partial(static_cast<size_t>(jobs));
    std::vector<EnumerationStats> part_stats(static_cast<size_t>(jobs));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
    auto worker = [&](int id) {
      try {
        MembershipCache cache(cls);
        auto visit = [&](const RankTable& rho) {
          if (!excluded_with_cache(rho, cache)) return;
          RankTable canon = canonical_table(rho);
          std::vector<int64_t> key(canon.ranks().begin(), canon.ranks().end());
          partial[static_cast<size_t>(id)].emplace(std::move(key), std::move(canon));
        };
        if (jobs == 1) {
          part_stats[0] = for_each_polymatroid(n, cls.k, visit, options.budget);
        } else {
          EnumerationStats acc;
          for (int64_t first = id; first <= cls.k; first += jobs) {
            const auto s = for_each_polymatroid(n, cls.k, visit, options.budget, first);
            acc.nodes += s.nodes;
            acc.tables += s.tables;
          }
          part_stats[static_cast<size_t>(id)] = acc;
        }
      } catch (...) {
        errors[static_cast<size_t>(id)] = std::current_exception();
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> threads;
      for (int id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
      for (auto& t : threads) t.join();
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (size_t i = 0; i < partial.size(); ++i) {
      total.nodes += part_stats[i].nodes;
      total.tables += part_stats[i].tables;
      found.merge(partial[i]);
    }
  }
  if (stats) *stats = total;
  std::vector<ExcludedMinorRecord> out;
  for (const auto& [key, rho] : found) out.push_back(make_record(rho, cls));
  std::sort(out.begin(), out.end(), by_size_then_canonical);
  return out;
}

bool dual_closure_check(const std::vector<ExcludedMinorRecord>& records, const ClassSpec& cls) {
  int scope = 0;
  for (const auto& r : records) scope = std::max(scope, r.polymatroid.size());
  for (const auto& r : records) {
    const RankTable dual = k_dual(r.polymatroid);
    if (!is_excluded_minor(dual, cls)) return false;
    const auto canon = canonical_form(dual).ranks;
    const bool present = std::any_of(records.begin(), records.end(), [&](const auto& other) {
      return other.polymatroid.size() == dual.size() && other.canonical == canon;
    });
    if (dual.size() <= scope && !present) return false;
  }
  return true;
}

bool simple_records_check(const std::vector<ExcludedMinorRecord>& records) {
  return std::none_of(records.begin(), records.end(), [](const auto& r) {
    return has_loops(r.polymatroid) || has_parallel_points(r.polymatroid);
  });
}

}  // namespace pmkit
