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


#include "pmkit/pmkit.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <new>
#include <string>

#include "compression.h"
#include "decomposition.h"
#include "error.h"
#include "io.h"
#include "natural.h"
#include "polytope.h"
#include "rank_table.h"
#include "uniform_minors.h"
#include "verify.h"

struct pmkit_polymatroid {
  pmkit::RankTable table;
};

namespace {

using pmkit::Error;
using pmkit::ErrorCode;
using pmkit::OrderedJson;
using pmkit::RankTable;

thread_local std::string g_last_error;

pmkit_status record(const Error& e) {
  nlohmann::ordered_json doc;
  doc["error"] = std::string(pmkit::error_code_name(e.code()));
  doc["status"] = static_cast<int>(e.code());
  doc["message"] = e.what();
  doc["detail"] = e.detail();
  g_last_error = doc.dump();
  return static_cast<pmkit_status>(e.code());
}

// Runs f, translating exceptions into a status and the thread's last error.
template <typename F>
pmkit_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return PMKIT_OK;
  } catch (const Error& e) {
    return record(e);
  } catch (const std::bad_alloc&) {
    return record(Error(ErrorCode::kInternal, "out of memory"));
  } catch (const std::exception& e) {
    return record(Error(ErrorCode::kInternal, e.what()));
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, std::string(name) + " must not be null");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pmkit_polymatroid* wrap(RankTable t) { return new pmkit_polymatroid{std::move(t)}; }

std::vector<std::string> split_labels(const char* csv) {
  std::vector<std::string> out;
  if (csv == nullptr || *csv == '\0') return out;
  std::string cur;
  for (const char* c = csv; *c != '\0'; ++c) {
    if (*c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += *c;
    }
  }
  out.push_back(cur);
  return out;
}

pmkit::Subset subset_of(const RankTable& t, const char* csv) {
  return t.ground().subset_of(split_labels(csv));
}

pmkit::Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    size_t used = 0;
    const int64_t num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument("");
    int64_t den = 1;
    if (slash != std::string::npos) {
      const std::string d = text.substr(slash + 1);
      den = std::stoll(d, &used);
      if (used != d.size() || den == 0) throw std::invalid_argument("");
    }
    return pmkit::Rational(num, den);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParseError, "bad coordinate '" + text + "'", {{"coordinate", text}});
  }
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

extern "C" {

const char* pmkit_version(void) { return pmkit::kToolVersion; }

const char* pmkit_status_name(pmkit_status status) {
  const int v = static_cast<int>(status);
  if (v < 0 || v > static_cast<int>(ErrorCode::kInternal)) return "Unknown";
  return pmkit::error_code_name(static_cast<ErrorCode>(v)).data();
}

const char* pmkit_last_error(void) { return g_last_error.c_str(); }

void pmkit_string_free(char* s) { std::free(s); }

pmkit_status pmkit_get_limits(int* max_elements, int64_t* max_k, uint64_t* budget) {
  return guarded([&] {
    const pmkit::Limits l = pmkit::limits();
    if (max_elements) *max_elements = l.max_elements;
    if (max_k) *max_k = l.max_k;
    if (budget) *budget = l.search_budget;
  });
}

pmkit_status pmkit_set_limits(int max_elements, int64_t max_k, uint64_t budget) {
  return guarded([&] {
    if (max_elements < 0 || max_elements > pmkit::kHardMaxElements || max_k < 0 || budget == 0) {
      throw Error(ErrorCode::kInvalidArgument, "limits out of range",
                  {{"max_elements", max_elements}, {"max_k", max_k}, {"budget", budget},
                   {"hard_max_elements", pmkit::kHardMaxElements}});
    }
    pmkit::set_limits({max_elements, max_k, budget});
  });
}

pmkit_status pmkit_polymatroid_from_json(const char* json, pmkit_polymatroid** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = wrap(pmkit::parse_polymatroid(json));
  });
}

pmkit_status pmkit_polymatroid_to_json(const pmkit_polymatroid* p, char** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    *out = copy_string(pmkit::serialize_polymatroid(p->table));
  });
}

void pmkit_polymatroid_free(pmkit_polymatroid* p) { delete p; }

pmkit_status pmkit_polymatroid_size(const pmkit_polymatroid* p, int* out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    *out = p->table.size();
  });
}

pmkit_status pmkit_polymatroid_k(const pmkit_polymatroid* p, int64_t* out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    *out = p->table.k();
  });
}

pmkit_status pmkit_polymatroid_rank(const pmkit_polymatroid* p, const char* subset, int64_t* out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    *out = p->table.rank(subset_of(p->table, subset));
  });
}

pmkit_status pmkit_nullity(const pmkit_polymatroid* p, int64_t* out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    *out = pmkit::nullity(p->table);
  });
}

pmkit_status pmkit_uniform(int64_t a, int64_t b, pmkit_polymatroid** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(pmkit::uniform(a, b));
  });
}

pmkit_status pmkit_delete(const pmkit_polymatroid* p, const char* elements,
                          pmkit_polymatroid** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    *out = wrap(pmkit::delete_elements(p->table, split_labels(elements)));
  });
}

pmkit_status pmkit_contract(const pmkit_polymatroid* p, const char* elements,
                            pmkit_polymatroid** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    *out = wrap(pmkit::contract_elements(p->table, split_labels(elements)));
  });
}

pmkit_status pmkit_compress(const pmkit_polymatroid* p, const char* element, int64_t level,
                            pmkit_polymatroid** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(element, "element");
    require(out, "out");
    *out = wrap(pmkit::compress(p->table, std::string(element), level));
  });
}

pmkit_status pmkit_k_dual(const pmkit_polymatroid* p, pmkit_polymatroid** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    *out = wrap(pmkit::k_dual(p->table));
  });
}

pmkit_status pmkit_simplify(const pmkit_polymatroid* p, pmkit_polymatroid** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    *out = wrap(pmkit::simplify(p->table));
  });
}

pmkit_status pmkit_direct_sum(const pmkit_polymatroid* p1, const pmkit_polymatroid* p2,
                              pmkit_polymatroid** out) {
  return guarded([&] {
    require(p1, "p1");
    require(p2, "p2");
    require(out, "out");
    *out = wrap(pmkit::direct_sum(p1->table, p2->table));
  });
}

pmkit_status pmkit_add(const pmkit_polymatroid* p1, const pmkit_polymatroid* p2,
                       pmkit_polymatroid** out) {
  return guarded([&] {
    require(p1, "p1");
    require(p2, "p2");
    require(out, "out");
    *out = wrap(pmkit::add(p1->table, p2->table));
  });
}

pmkit_status pmkit_scalar_multiply(int64_t c, const pmkit_polymatroid* p,
                                   pmkit_polymatroid** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    *out = wrap(pmkit::scalar_multiply(c, p->table));
  });
}

pmkit_status pmkit_is_isomorphic(const pmkit_polymatroid* p1, const pmkit_polymatroid* p2,
                                 int* out) {
  return guarded([&] {
    require(p1, "p1");
    require(p2, "p2");
    require(out, "out");
    *out = pmkit::is_isomorphic(p1->table, p2->table) ? 1 : 0;
  });
}

pmkit_status pmkit_natural_rank(const pmkit_polymatroid* p, const int64_t* counts,
                                size_t count_len, int64_t* out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    if (count_len > 0) require(counts, "counts");
    *out = pmkit::multiset_rank(p->table, std::span<const int64_t>(counts, count_len));
  });
}

pmkit_status pmkit_natural_grid_csv(const pmkit_polymatroid* p, char** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    pmkit::MultisetRankGrid grid(p->table);
    *out = copy_string(grid.to_csv());
  });
}

pmkit_status pmkit_decompose_json(const pmkit_polymatroid* p, int64_t n,
                                  pmkit_decompose_method method, char** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    pmkit::CornerDecomposition d;
    switch (method) {
      case PMKIT_DECOMPOSE_DIRECT:
        d = pmkit::corner_decompose(p->table, n);
        break;
      case PMKIT_DECOMPOSE_VIA_MINORS:
        d = pmkit::decompose_via_minors(p->table, n);
        break;
      case PMKIT_DECOMPOSE_ESSENTIAL:
        d = pmkit::essential_bound(p->table);
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument, "unknown decomposition method");
    }
    *out = copy_string(pmkit::decomposition_to_json(d).dump(2) + "\n");
  });
}

pmkit_status pmkit_collapse_check_json(const pmkit_polymatroid* p, const char* element,
                                       int64_t level, char** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    const RankTable& t = p->table;
    OrderedJson doc;
    OrderedJson rows = OrderedJson::array();
    if (element == nullptr) {
      doc["m"] = pmkit::essential_bound(t).n;
      for (const auto& row : pmkit::collapse_report(t)) {
        OrderedJson r;
        r["element"] = row.element;
        r["level"] = row.level;
        r["collapse"] = pmkit::collapse_tag_name(row.tag);
        rows.push_back(std::move(r));
      }
    } else {
      const int e = t.ground().index_of(element);
      if (e < 0) {
        throw Error(ErrorCode::kUnknownElement, std::string("unknown element '") + element + "'",
                    {{"element", element}});
      }
      const auto res = pmkit::compression_collapse(t, e, level);
      doc["m"] = res.m;
      OrderedJson r;
      r["element"] = element;
      r["level"] = level;
      r["collapse"] = pmkit::collapse_tag_name(res.tag);
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    *out = copy_string(doc.dump(2) + "\n");
  });
}

pmkit_status pmkit_class_check_json(const pmkit_polymatroid* p, int64_t a, int64_t b,
                                    char** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    const auto cls = pmkit::ClassSpec::make(a, b, p->table.k());
    OrderedJson doc;
    doc["class"] = {{"a", a}, {"b", b}, {"k", cls.k}};
    const auto witnesses = pmkit::class_witnesses(p->table, cls);
    doc["in_class"] = witnesses.empty();
    OrderedJson ws = OrderedJson::array();
    for (const auto& w : witnesses) ws.push_back(pmkit::witness_to_json(w, p->table.ground()));
    doc["witnesses"] = std::move(ws);
    *out = copy_string(doc.dump(2) + "\n");
  });
}

pmkit_status pmkit_excluded_check_json(const pmkit_polymatroid* p, int64_t a, int64_t b,
                                       char** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    const auto cls = pmkit::ClassSpec::make(a, b, p->table.k());
    const bool excluded = pmkit::is_excluded_minor(p->table, cls);
    OrderedJson doc;
    doc["class"] = {{"a", a}, {"b", b}, {"k", cls.k}};
    doc["excluded_minor"] = excluded;
    doc["in_class"] = pmkit::in_class(p->table, cls);
    if (excluded) {
      const auto rec = pmkit::make_record(p->table, cls);
      doc["in_gamma"] = pmkit::is_in_gamma(p->table, cls);
      doc["tags"] = rec.tags;
    } else {
      doc["in_gamma"] = nullptr;
      doc["tags"] = OrderedJson::array();
    }
    *out = copy_string(doc.dump(2) + "\n");
  });
}

pmkit_status pmkit_enumerate_json(int64_t a, int64_t b, int64_t k,
                                  const pmkit_enumerate_options* options, char** out) {
  return guarded([&] {
    require(options, "options");
    require(out, "out");
    const auto cls = pmkit::ClassSpec::make(a, b, k);
    if (options->max_elements < 1) {
      throw Error(ErrorCode::kInvalidArgument, "max_elements must be at least 1");
    }
    pmkit::CatalogMeta meta;
    meta.max_elements = options->max_elements;
    meta.budget = options->budget != 0 ? options->budget : pmkit::limits().search_budget;
    if (options->timestamp) meta.timestamp = utc_now();
    std::vector<pmkit::ExcludedMinorRecord> records;
    if (options->max_elements <= 2) {
      meta.source = "classified";
      records = pmkit::enumerate_singleton_excluded(cls);
      if (options->max_elements == 2) {
        for (auto& r : pmkit::enumerate_doubleton_excluded(cls)) records.push_back(std::move(r));
      }
      std::stable_sort(records.begin(), records.end(), [](const auto& x, const auto& y) {
        return std::pair(x.polymatroid.size(), x.canonical) <
               std::pair(y.polymatroid.size(), y.canonical);
      });
    } else {
      if (options->max_elements > pmkit::limits().max_elements) {
        throw Error(ErrorCode::kLimitExceeded, "max_elements exceeds the configured limit",
                    {{"max_elements", options->max_elements},
                     {"limit", pmkit::limits().max_elements}});
      }
      meta.source = "search";
      pmkit::SearchOptions opts;
      opts.max_elements = options->max_elements;
      opts.budget = meta.budget;
      opts.jobs = options->jobs > 0 ? options->jobs : 1;
      records = pmkit::search_excluded(cls, opts);
    }
    *out = copy_string(pmkit::catalog_to_json(cls, records, meta).dump(2) + "\n");
  });
}

pmkit_status pmkit_polytope_csv(const pmkit_polymatroid* p, pmkit_polytope_kind kind,
                                const char* contract, const char* del, char** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    const RankTable& t = p->table;
    std::vector<pmkit::LatticePoint> points;
    switch (kind) {
      case PMKIT_POLYTOPE_INDEPENDENCE:
        points = pmkit::lattice_points(t, false);
        break;
      case PMKIT_POLYTOPE_BASE:
        points = pmkit::lattice_points(t, true);
        break;
      case PMKIT_POLYTOPE_VERTICES:
        points = pmkit::base_vertices(t);
        break;
      case PMKIT_POLYTOPE_MINOR_FACE:
        points = pmkit::minor_face(t, subset_of(t, contract), subset_of(t, del)).points;
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument, "unknown polytope kind");
    }
    *out = copy_string(pmkit::points_to_csv(t.ground(), points));
  });
}

pmkit_status pmkit_polytope_svg(const pmkit_polymatroid* p, char** out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(out, "out");
    *out = copy_string(pmkit::independence_polytope_svg(p->table));
  });
}

pmkit_status pmkit_polytope_contains(const pmkit_polymatroid* p, const char* point, int base,
                                     int* out) {
  return guarded([&] {
    require(p, "polymatroid");
    require(point, "point");
    require(out, "out");
    pmkit::RationalPoint x;
    for (const auto& c : split_labels(point)) x.coords.push_back(parse_rational(c));
    *out = (base ? pmkit::in_base_polytope(p->table, x) : pmkit::in_independence_polytope(p->table, x))
               ? 1
               : 0;
  });
}

pmkit_status pmkit_verify(const char* suite, int jobs, int as_text, int* passed, char** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    pmkit::VerifyOptions opts;
    opts.jobs = jobs > 0 ? jobs : 1;
    const auto report = pmkit::run_suite(suite, opts);
    if (passed) *passed = report.pass() ? 1 : 0;
    *out = copy_string(as_text ? report.to_text() : report.to_json().dump(2) + "\n");
  });
}

}  // extern "C"
