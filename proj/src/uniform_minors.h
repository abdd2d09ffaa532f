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

// Uniform minors of k-natural matroids and the classes of k-polymatroids
// whose natural matroid has neither U_{a,b} nor U_{b-a,b} as a minor.

#ifndef PMKIT_UNIFORM_MINORS_H_
#define PMKIT_UNIFORM_MINORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "natural.h"
#include "rank_table.h"

namespace pmkit {

struct ClassSpec {
  int64_t a = 1;
  int64_t b = 2;
  int64_t k = 1;

  // Throws kInvalidParams unless 1 <= a, 2a <= b and k >= 1.
  static ClassSpec make(int64_t a, int64_t b, int64_t k);

  // k >= 2(b - a): the range in which the singleton and doubleton
  // classifications hold.
  bool classification_regime() const { return k >= 2 * (b - a); }

  bool operator==(const ClassSpec&) const = default;
};

// The natural matroid contracted by `contract` clones and restricted to
// `keep` clones is U_{rank, size}.
struct MinorWitness {
  CountVector contract;
  CountVector keep;
  int64_t rank = 0;
  int64_t size = 0;
};

struct ExcludedMinorRecord {
  RankTable polymatroid;
  std::vector<int64_t> canonical;
  // {"singleton", "Ex^m"}, {"doubleton", "Ex_(re,rf)^m"} or {"other"}.
  std::vector<std::string> tags;
  std::vector<MinorWitness> witnesses;
};

// Searches the natural matroid of rho for a U_{a0,b0} minor. With `prune`,
// contract vectors whose contraction has rank below a0 or nullity below
// b0 - a0 are skipped.
std::optional<MinorWitness> has_uniform_minor(const RankTable& rho, int64_t a0, int64_t b0,
                                              bool prune = true);
std::optional<MinorWitness> has_uniform_minor(const MultisetRankGrid& grid, int64_t a0,
                                              int64_t b0, bool prune = true);

// False when contracting `c` leaves rank or nullity below a, so that no
// further minor can be U_{a,b} or U_{b-a,b}.
bool nullity_prune(const RankTable& rho, const CountVector& c, const ClassSpec& cls);

// Throw kKMismatch if rho.k() != cls.k.
bool in_class(const RankTable& rho, const ClassSpec& cls);
bool is_excluded_minor(const RankTable& rho, const ClassSpec& cls);

// The uniform minors U_{a,b} and U_{b-a,b} found in rho (empty if in class).
std::vector<MinorWitness> class_witnesses(const RankTable& rho, const ClassSpec& cls);

// Singletons of rank m in [a, k-a]. Throws kRegimeViolated outside
// b >= 2a, k >= 2(b-a), and kClassificationMismatch if a member fails
// direct verification.
std::vector<ExcludedMinorRecord> enumerate_singleton_excluded(const ClassSpec& cls);

// Excluded doubletons (re <= rf, m), found by testing every doubleton
// k-polymatroid with is_excluded_minor. Throws kRegimeViolated.
std::vector<ExcludedMinorRecord> enumerate_doubleton_excluded(const ClassSpec& cls);

// Why rho fails to be an excluded minor: "in class", or "delete x" /
// "contract x" naming a single-element minor outside the class. Empty when
// rho is an excluded minor.
std::string excluded_minor_obstruction(const RankTable& rho, const ClassSpec& cls);

struct DoubletonAuditEntry {
  int64_t rho_e = 0;
  int64_t rho_f = 0;
  int64_t m = 0;
  std::vector<int> rows;
  bool excluded = false;
  std::string obstruction;
};

// Compares the excluded rows (3 and 5) of the classification table with direct
// detection over every doubleton (re <= rf).
struct DoubletonTableAudit {
  std::vector<DoubletonAuditEntry> listed;    // triples in rows 3 or 5
  std::vector<DoubletonAuditEntry> rejected;  // listed, yet not excluded minors
  std::vector<DoubletonAuditEntry> unlisted;  // excluded minors outside rows 3 and 5
};
DoubletonTableAudit audit_doubleton_table(const ClassSpec& cls);

// Rows of the doubleton classification table:
//   1: re, rf in [0,a-1],            m in [rf, re+rf]          in class
//   2: re in [0,a-1], rf in [k-a+1,k], m in [re+k-a+1, re+rf]  in class
//   3: re in [1,a-1], rf in [k-a+1,k], m in [rf, re+k-a]       excluded
//   4: re, rf in [k-a+1,k],           m in [rf+k-a+1, re+rf]   in class
//   5: re, rf in [k-a+1,k],           m in [rf, rf+k-a]        excluded
//   6: rf in [a,k-a]                                          neither
//   7: re in [a,k-a]                                          neither
// The pair is first ordered so that re <= rf. Returns every matching row.
std::vector<int> classify_doubleton(int64_t a, int64_t k, int64_t rho_e, int64_t rho_f,
                                    int64_t m);

// a(-2a^2 + 3ak + 3k + 2)/6. Throws kNonIntegerResult if not integral.
int64_t count_formula(int64_t a, int64_t k);

struct SearchOptions {
  int max_elements = 3;
  // Node budget for each enumeration run (one per ground-set size and worker).
  uint64_t budget = 10'000'000;
  int jobs = 1;
  // Needed for max_elements > 3.
  bool allow_large = false;
};

struct SearchStats {
  uint64_t nodes = 0;
  uint64_t tables = 0;
};

// Every excluded minor on at most max_elements elements, one per isomorphism
// class, each stored in canonical form, sorted by (|E|, canonical ranks).
// Throws kSearchBudgetExceeded, kInvalidParams.
std::vector<ExcludedMinorRecord> search_excluded(const ClassSpec& cls,
                                                 const SearchOptions& options,
                                                 SearchStats* stats = nullptr);

// Every record's k-dual is an excluded minor and, when no larger than the
// largest record, is isomorphic to some record.
bool dual_closure_check(const std::vector<ExcludedMinorRecord>& records, const ClassSpec& cls);

// No record has a loop or a pair of parallel points.
bool simple_records_check(const std::vector<ExcludedMinorRecord>& records);

// Builds a record (canonical form, tags, witnesses) for an excluded minor.
ExcludedMinorRecord make_record(const RankTable& rho, const ClassSpec& cls);

}  // namespace pmkit

#endif  // PMKIT_UNIFORM_MINORS_H_
