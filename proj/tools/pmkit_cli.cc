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


// Command-line front end over the C API.
//
// Exit codes: 0 success, 1 domain rejection (JSON error on stderr, or text
// with --human), 2 usage error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmkit/pmkit.h"

namespace {

constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

struct Settings {
  bool human = false;
  std::string out;
  std::optional<int> limit_elements;
  std::optional<int64_t> limit_k;
  std::optional<uint64_t> budget;
};

// Raised to unwind after a failed library call.
struct Failure {
  int exit_code;
};

struct Polymatroid {
  pmkit_polymatroid* p = nullptr;
  Polymatroid() = default;
  Polymatroid(const Polymatroid&) = delete;
  Polymatroid& operator=(const Polymatroid&) = delete;
  ~Polymatroid() { pmkit_polymatroid_free(p); }
};

class Cli {
 public:
  explicit Cli(const Settings& s) : s_(s) {}

  // Reports a failed status and unwinds.
  void check(pmkit_status status) const {
    if (status == PMKIT_OK) return;
    const std::string err = pmkit_last_error();
    if (s_.human) {
      const auto doc = nlohmann::json::parse(err, nullptr, false);
      if (doc.is_discarded()) {
        std::cerr << "error: " << pmkit_status_name(status) << "\n";
      } else {
        std::cerr << "error: " << doc.value("error", "") << ": " << doc.value("message", "")
                  << "\n";
        if (doc.contains("detail") && !doc["detail"].is_null() && !doc["detail"].empty()) {
          std::cerr << "  detail: " << doc["detail"].dump() << "\n";
        }
      }
    } else {
      std::cerr << err << "\n";
    }
    throw Failure{status == PMKIT_UNKNOWN_SUITE ? kExitUsage : kExitRejected};
  }

  // Consumes a string returned by the library.
  std::string take(char* s) const {
    std::string out(s == nullptr ? "" : s);
    pmkit_string_free(s);
    return out;
  }

  void emit(const std::string& text) const {
    if (s_.out.empty()) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream f(s_.out, std::ios::binary);
    f << text;
    if (!f) {
      nlohmann::json err = {{"error", "IoError"},
                            {"message", "cannot write '" + s_.out + "'"},
                            {"detail", {{"path", s_.out}}}};
      std::cerr << (s_.human ? "error: " + err["message"].get<std::string>() : err.dump()) << "\n";
      throw Failure{kExitRejected};
    }
  }

  void load(const std::string& path, Polymatroid& out) const {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) {
        nlohmann::json err = {{"error", "IoError"},
                              {"message", "cannot read '" + path + "'"},
                              {"detail", {{"path", path}}}};
        std::cerr << (s_.human ? "error: " + err["message"].get<std::string>() : err.dump())
                  << "\n";
        throw Failure{kExitRejected};
      }
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    check(pmkit_polymatroid_from_json(text.c_str(), &out.p));
  }

  void emit_polymatroid(const pmkit_polymatroid* p) const {
    char* s = nullptr;
    check(pmkit_polymatroid_to_json(p, &s));
    emit(take(s));
  }

 private:
  const Settings& s_;
};

std::vector<int64_t> parse_counts(const std::string& csv) {
  std::vector<int64_t> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::logic_error&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw CLI::ValidationError("--counts", "not an integer: " + item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  CLI::App app{"Polymatroid toolkit: minors, k-natural matroids, excluded minors, corner "
               "decompositions and polytopes."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pmkit_version()));
  app.add_flag("--human", s.human, "Report errors as text instead of JSON");
  app.add_option("--out", s.out, "Write output to this file instead of stdout");
  app.add_option("--limit-elements", s.limit_elements,
                 "Largest ground set accepted (default 6, env PMKIT_MAX_ELEMENTS)");
  app.add_option("--limit-k", s.limit_k, "Largest k accepted (default 16, env PMKIT_MAX_K)");
  app.add_option("--budget", s.budget,
                 "Search node budget per enumeration run (default 10^7, env PMKIT_BUDGET)");

  Cli cli(s);
  std::function<void()> action;

  // validate
  std::string file;
  auto* validate = app.add_subcommand("validate", "Check the polymatroid axioms");
  validate->add_option("file", file, "Polymatroid JSON ('-' for stdin)")->required();
  validate->callback([&] {
    action = [&] {
      Polymatroid p;
      cli.load(file, p);
      int n = 0;
      int64_t k = 0, eta = 0, total = 0;
      cli.check(pmkit_polymatroid_size(p.p, &n));
      cli.check(pmkit_polymatroid_k(p.p, &k));
      cli.check(pmkit_nullity(p.p, &eta));
      char* json = nullptr;
      cli.check(pmkit_polymatroid_to_json(p.p, &json));
      const auto doc = nlohmann::json::parse(cli.take(json));
      std::string full;
      for (const auto& l : doc["ground"]) full += (full.empty() ? "" : ",") + l.get<std::string>();
      cli.check(pmkit_polymatroid_rank(p.p, full.c_str(), &total));
      nlohmann::ordered_json out;
      out["valid"] = true;
      out["size"] = n;
      out["k"] = k;
      out["rank"] = total;
      out["nullity"] = eta;
      cli.emit(out.dump(2) + "\n");
    };
  });

  // minor
  std::string del, con;
  auto* minor = app.add_subcommand("minor", "Delete and contract disjoint element sets");
  minor->add_option("file", file, "Polymatroid JSON")->required();
  minor->add_option("--delete", del, "Comma-separated elements to delete");
  minor->add_option("--contract", con, "Comma-separated elements to contract");
  minor->callback([&] {
    action = [&] {
      std::stringstream a(del), b(con);
      std::string x;
      std::vector<std::string> dl, cl;
      while (std::getline(a, x, ',')) dl.push_back(x);
      while (std::getline(b, x, ',')) cl.push_back(x);
      for (const auto& l : dl) {
        if (std::find(cl.begin(), cl.end(), l) == cl.end()) continue;
        const nlohmann::json err = {{"error", "OverlappingSets"},
                                    {"status", PMKIT_OVERLAPPING_SETS},
                                    {"message", "'" + l + "' is both deleted and contracted"},
                                    {"detail", {{"element", l}}}};
        std::cerr << (s.human ? "error: OverlappingSets: " + err["message"].get<std::string>()
                              : err.dump())
                  << "\n";
        throw Failure{kExitRejected};
      }
      Polymatroid p, c, d;
      cli.load(file, p);
      cli.check(pmkit_contract(p.p, con.c_str(), &c.p));
      cli.check(pmkit_delete(c.p, del.c_str(), &d.p));
      cli.emit_polymatroid(d.p);
    };
  });

  // compress
  std::string element;
  int64_t level = 0;
  auto* compress = app.add_subcommand("compress", "l-compression at an element");
  compress->add_option("file", file, "Polymatroid JSON")->required();
  compress->add_option("--element", element, "Element to compress")->required();
  compress->add_option("--level", level, "Level l in [0, k]")->required();
  compress->callback([&] {
    action = [&] {
      Polymatroid p, q;
      cli.load(file, p);
      cli.check(pmkit_compress(p.p, element.c_str(), level, &q.p));
      cli.emit_polymatroid(q.p);
    };
  });

  // dual
  auto* dual = app.add_subcommand("dual", "k-dual");
  dual->add_option("file", file, "Polymatroid JSON")->required();
  dual->callback([&] {
    action = [&] {
      Polymatroid p, q;
      cli.load(file, p);
      cli.check(pmkit_k_dual(p.p, &q.p));
      cli.emit_polymatroid(q.p);
    };
  });

  // natural-rank
  std::string counts;
  std::vector<int64_t> count_vector;
  bool grid = false;
  auto* natural = app.add_subcommand("natural-rank", "Rank in the k-natural matroid");
  natural->add_option("file", file, "Polymatroid JSON")->required();
  auto* counts_opt =
      natural->add_option("--counts", counts, "Clone count per element, comma-separated");
  auto* grid_flag = natural->add_flag("--grid", grid, "Print the whole grid as CSV");
  counts_opt->excludes(grid_flag);
  natural->callback([&] {
    if (counts.empty() && !grid) throw CLI::RequiredError("--counts or --grid");
    if (!grid) count_vector = parse_counts(counts);
    action = [&] {
      Polymatroid p;
      cli.load(file, p);
      if (grid) {
        char* csv = nullptr;
        cli.check(pmkit_natural_grid_csv(p.p, &csv));
        cli.emit(cli.take(csv));
        return;
      }
      int64_t r = 0;
      cli.check(pmkit_natural_rank(p.p, count_vector.data(), count_vector.size(), &r));
      nlohmann::ordered_json out;
      out["counts"] = count_vector;
      out["rank"] = r;
      cli.emit(out.dump(2) + "\n");
    };
  });

  // decompose
  std::optional<int64_t> corner_n;
  bool essential = false, via_minors = false;
  auto* decompose = app.add_subcommand("decompose", "n-corner decomposition");
  decompose->add_option("file", file, "Polymatroid JSON")->required();
  auto* n_opt = decompose->add_option("--n", corner_n, "Corner size n");
  auto* ess = decompose->add_flag("--essential", essential, "Use the least feasible n");
  decompose->add_flag("--via-minors", via_minors,
                      "Glue from singleton and doubleton minors (requires --n)");
  ess->excludes(n_opt);
  decompose->callback([&] {
    if (!essential && !corner_n) throw CLI::RequiredError("--n or --essential");
    action = [&] {
      Polymatroid p;
      cli.load(file, p);
      const pmkit_decompose_method method = essential    ? PMKIT_DECOMPOSE_ESSENTIAL
                                            : via_minors ? PMKIT_DECOMPOSE_VIA_MINORS
                                                         : PMKIT_DECOMPOSE_DIRECT;
      char* out = nullptr;
      cli.check(pmkit_decompose_json(p.p, corner_n.value_or(0), method, &out));
      cli.emit(cli.take(out));
    };
  });

  // collapse-check
  std::optional<std::string> collapse_element;
  std::optional<int64_t> collapse_level;
  auto* collapse = app.add_subcommand("collapse-check",
                                      "Compression collapse onto deletion or contraction");
  collapse->add_option("file", file, "Polymatroid JSON")->required();
  auto* ce = collapse->add_option("--element", collapse_element, "Single element to check");
  auto* cl = collapse->add_option("--level", collapse_level, "Level for --element");
  ce->needs(cl);
  cl->needs(ce);
  collapse->callback([&] {
    action = [&] {
      Polymatroid p;
      cli.load(file, p);
      char* out = nullptr;
      cli.check(pmkit_collapse_check_json(
          p.p, collapse_element ? collapse_element->c_str() : nullptr, collapse_level.value_or(0),
          &out));
      cli.emit(cli.take(out));
    };
  });

  // class-check / excluded-check
  int64_t a = 0, b = 0;
  auto* class_check = app.add_subcommand("class-check", "Membership in the (a, b, k) class");
  class_check->add_option("file", file, "Polymatroid JSON")->required();
  class_check->add_option("--a", a, "Uniform rank a")->required();
  class_check->add_option("--b", b, "Uniform size b")->required();
  class_check->callback([&] {
    action = [&] {
      Polymatroid p;
      cli.load(file, p);
      char* out = nullptr;
      cli.check(pmkit_class_check_json(p.p, a, b, &out));
      cli.emit(cli.take(out));
    };
  });
  auto* excluded = app.add_subcommand("excluded-check", "Excluded-minor test for (a, b, k)");
  excluded->add_option("file", file, "Polymatroid JSON")->required();
  excluded->add_option("--a", a, "Uniform rank a")->required();
  excluded->add_option("--b", b, "Uniform size b")->required();
  excluded->callback([&] {
    action = [&] {
      Polymatroid p;
      cli.load(file, p);
      char* out = nullptr;
      cli.check(pmkit_excluded_check_json(p.p, a, b, &out));
      cli.emit(cli.take(out));
    };
  });

  // enumerate
  int64_t k = 0;
  int max_elements = 2;
  int jobs = 1;
  bool timestamp = false;
  auto* enumerate = app.add_subcommand("enumerate", "Catalog of excluded minors");
  enumerate->add_option("--a", a, "Uniform rank a")->required();
  enumerate->add_option("--b", b, "Uniform size b")->required();
  enumerate->add_option("--k", k, "k")->required();
  enumerate->add_option("--max-elements", max_elements,
                        "Ground-set bound: 1 or 2 classify, 3 or more search")
      ->capture_default_str();
  enumerate->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  enumerate->add_flag("--timestamp", timestamp, "Record the UTC time in the metadata");
  enumerate->callback([&] {
    action = [&] {
      pmkit_enumerate_options opts{max_elements, s.budget.value_or(0), jobs, timestamp ? 1 : 0};
      char* out = nullptr;
      cli.check(pmkit_enumerate_json(a, b, k, &opts, &out));
      cli.emit(cli.take(out));
    };
  });

  // polytope
  std::string kind = "independence", contains;
  bool base = false;
  auto* polytope = app.add_subcommand("polytope", "Lattice points, vertices, faces and plots");
  polytope->add_option("file", file, "Polymatroid JSON")->required();
  polytope->add_option("--kind", kind, "independence, base, vertices, minor-face or svg")
      ->check(CLI::IsMember({"independence", "base", "vertices", "minor-face", "svg"}))
      ->capture_default_str();
  polytope->add_option("--contract", con, "Contracted elements for minor-face");
  polytope->add_option("--delete", del, "Deleted elements for minor-face");
  polytope->add_option("--contains", contains,
                       "Test a rational point 'x1,x2,..' (entries p or p/q) instead");
  polytope->add_flag("--base", base, "With --contains, test the base polytope");
  polytope->callback([&] {
    action = [&] {
      Polymatroid p;
      cli.load(file, p);
      if (!contains.empty()) {
        int in = 0;
        cli.check(pmkit_polytope_contains(p.p, contains.c_str(), base ? 1 : 0, &in));
        nlohmann::ordered_json out;
        out["point"] = contains;
        out["polytope"] = base ? "base" : "independence";
        out["contains"] = in != 0;
        cli.emit(out.dump(2) + "\n");
        return;
      }
      char* out = nullptr;
      if (kind == "svg") {
        cli.check(pmkit_polytope_svg(p.p, &out));
      } else {
        const pmkit_polytope_kind pk = kind == "base"       ? PMKIT_POLYTOPE_BASE
                                       : kind == "vertices" ? PMKIT_POLYTOPE_VERTICES
                                       : kind == "minor-face"
                                           ? PMKIT_POLYTOPE_MINOR_FACE
                                           : PMKIT_POLYTOPE_INDEPENDENCE;
        cli.check(pmkit_polytope_csv(p.p, pk, con.c_str(), del.c_str(), &out));
      }
      cli.emit(cli.take(out));
    };
  });

  // verify
  std::string suite = "paper";
  bool text = false;
  auto* verify = app.add_subcommand("verify", "Run a check suite: paper, properties or all");
  verify->add_option("--suite", suite, "paper, properties or all")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  verify->add_flag("--text", text, "Human-readable report instead of JSON");
  int passed = 0;
  verify->callback([&] {
    action = [&] {
      char* out = nullptr;
      cli.check(pmkit_verify(suite.c_str(), jobs, text ? 1 : 0, &passed, &out));
      cli.emit(cli.take(out));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (s.limit_elements || s.limit_k || s.budget) {
      int me = 0;
      int64_t mk = 0;
      uint64_t bud = 0;
      cli.check(pmkit_get_limits(&me, &mk, &bud));
      cli.check(pmkit_set_limits(s.limit_elements.value_or(me), s.limit_k.value_or(mk),
                                 s.budget.value_or(bud)));
    }
    action();
  } catch (const Failure& f) {
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << (s.human ? std::string("error: ") + e.what()
                          : nlohmann::json{{"error", "Internal"}, {"message", e.what()}}.dump())
              << "\n";
    return kExitRejected;
  }
  if (verify->parsed() && passed == 0) return kExitRejected;
  return 0;
}
