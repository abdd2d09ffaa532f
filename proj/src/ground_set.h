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

#ifndef PMKIT_GROUND_SET_H_
#define PMKIT_GROUND_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace pmkit {

// Hard ceiling imposed by the 32-bit subset representation. The configurable
// limit in Limits is always at most this.
inline constexpr int kHardMaxElements = 16;

// Runtime guards for exponential code paths. Defaults can be overridden with
// PMKIT_MAX_ELEMENTS, PMKIT_MAX_K and PMKIT_BUDGET, or programmatically.
struct Limits {
  int max_elements = 6;
  int64_t max_k = 16;
  uint64_t search_budget = 10'000'000;
};

Limits limits();
void set_limits(const Limits& l);

// A subset of a ground set; bit i stands for the i-th label.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(uint32_t bits) : bits_(bits) {}

  static constexpr Subset singleton(int i) { return Subset(uint32_t{1} << i); }
  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1);
  }

  constexpr uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool is_subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr Subset with(int i) const { return Subset(bits_ | (uint32_t{1} << i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(uint32_t{1} << i)); }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr bool operator==(const Subset&) const = default;
  constexpr auto operator<=>(const Subset&) const = default;

  // Indices of members in increasing order.
  std::vector<int> members() const;

 private:
  uint32_t bits_ = 0;
};

// Ordered, duplicate-free list of element labels. Order is fixed at
// construction and defines bit positions.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);
  GroundSet(std::initializer_list<std::string> labels)
      : GroundSet(std::vector<std::string>(labels)) {}

  // Ground set {e, f, g, ...} of the given size (labels "e".."p").
  static GroundSet standard(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<size_t>(i)); }
  Subset full() const { return Subset::full(size()); }
  size_t subset_count() const { return size_t{1} << size(); }

  // Throws Error(kUnknownElement).
  int index_of(std::string_view label) const;
  bool contains(std::string_view label) const;
  Subset subset_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;

  // Comma-joined labels in ground order; "" for the empty set.
  std::string key_of(Subset s) const;

  // Ground set restricted to the members of `keep`, in the same order.
  GroundSet restrict_to(Subset keep) const;

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

// Re-index a subset of `from` onto the sub-ground-set given by `keep`
// (the members of `keep` are packed into consecutive bits).
Subset compress_bits(Subset s, Subset keep);
// Inverse of compress_bits.
Subset expand_bits(Subset packed, Subset keep);

}  // namespace pmkit

#endif  // PMKIT_GROUND_SET_H_
