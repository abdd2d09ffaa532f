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


// Runs the acceptance criteria and prints one PASS/FAIL line per criterion,
// followed by its sub-checks. Arguments select criteria by number; no
// arguments runs all of them. Exits 1 if any selected criterion fails.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "verify.h"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) {
    for (int i = 1; i <= pmkit::acceptance_criterion_count(); ++i) ids.push_back(i);
  }
  std::vector<pmkit::CheckResult> results;
  for (int id : ids) {
    const auto r = pmkit::run_acceptance_criterion(id);
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.id << "  "
              << r.title << "  (" << std::fixed << std::setprecision(3) << r.seconds << " s)\n";
    for (const auto& l : r.lines) {
      std::cout << "        " << (l.informational ? "info" : (l.pass ? "ok  " : "FAIL")) << "  "
                << l.name;
      if (!l.detail.empty()) std::cout << ": " << l.detail;
      std::cout << "\n";
      if (!l.pass && !l.witness.is_null()) {
        std::cout << "              witness " << l.witness.dump() << "\n";
      }
    }
    std::cout.flush();
    results.push_back(r);
  }
  int passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  std::cout << "\n" << passed << "/" << results.size() << " criteria passed\n";
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "\n";
  }
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
