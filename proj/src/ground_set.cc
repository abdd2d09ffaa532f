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

#include "ground_set.h"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <set>

#include "error.h"

namespace pmkit {
namespace {

std::mutex g_limits_mu;
bool g_limits_loaded = false;
Limits g_limits;

template <typename T>
void read_env(const char* name, T& out) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(v, &end, 10);
  if (end != nullptr && *end == '\0') out = static_cast<T>(parsed);
}

}  // namespace

Limits limits() {
  std::lock_guard<std::mutex> lock(g_limits_mu);
  if (!g_limits_loaded) {
    read_env("PMKIT_MAX_ELEMENTS", g_limits.max_elements);
    read_env("PMKIT_MAX_K", g_limits.max_k);
    read_env("PMKIT_BUDGET", g_limits.search_budget);
    g_limits.max_elements = std::clamp(g_limits.max_elements, 0, kHardMaxElements);
    g_limits_loaded = true;
  }
  return g_limits;
}

void set_limits(const Limits& l) {
  std::lock_guard<std::mutex> lock(g_limits_mu);
  g_limits = l;
  g_limits.max_elements = std::clamp(g_limits.max_elements, 0, kHardMaxElements);
  g_limits_loaded = true;
}

std::vector<int> Subset::members() const {
  std::vector<int> out;
  for (uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kHardMaxElements) {
    throw Error(ErrorCode::kLimitExceeded,
                "ground set has " + std::to_string(labels_.size()) +
                    " elements; the hard maximum is " + std::to_string(kHardMaxElements),
                {{"size", labels_.size()}, {"max_elements", kHardMaxElements}});
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty() || l.find(',') != std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "labels must be nonempty and must not contain ','",
                  {{"label", l}});
    }
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::kLabelCollision, "duplicate label '" + l + "'",
                  {{"label", l}});
    }
  }
}

GroundSet GroundSet::standard(int n) {
  static const char* kNames[] = {"e", "f", "g", "h", "i", "j", "k", "l",
                                 "m", "n", "o", "p", "q", "r", "s", "t"};
  if (n < 0 || n > kHardMaxElements) {
    throw Error(ErrorCode::kLimitExceeded, "ground set size out of range",
                {{"size", n}});
  }
  std::vector<std::string> labels(kNames, kNames + n);
  return GroundSet(std::move(labels));
}

int GroundSet::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[static_cast<size_t>(i)] == label) return i;
  }
  throw Error(ErrorCode::kUnknownElement,
              "unknown element '" + std::string(label) + "'",
              {{"label", std::string(label)}});
}

bool GroundSet::contains(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

Subset GroundSet::subset_of(const std::vector<std::string>& labels) const {
  Subset s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (int i : s.members()) out.push_back(label(i));
  return out;
}

std::string GroundSet::key_of(Subset s) const {
  std::string out;
  for (int i : s.members()) {
    if (!out.empty()) out += ',';
    out += label(i);
  }
  return out;
}

GroundSet GroundSet::restrict_to(Subset keep) const {
  return GroundSet(labels_of(keep));
}

Subset compress_bits(Subset s, Subset keep) {
  uint32_t out = 0;
  int pos = 0;
  for (int i : keep.members()) {
    if (s.contains(i)) out |= uint32_t{1} << pos;
    ++pos;
  }
  return Subset(out);
}

Subset expand_bits(Subset packed, Subset keep) {
  uint32_t out = 0;
  int pos = 0;
  for (int i : keep.members()) {
    if (packed.contains(pos)) out |= uint32_t{1} << i;
    ++pos;
  }
  return Subset(out);
}

}  // namespace pmkit
