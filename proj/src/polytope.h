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

// Independence and base polytopes of a polymatroid: exact membership,
// lattice points, greedy vertices and the faces that correspond to minors.

#ifndef PMKIT_POLYTOPE_H_
#define PMKIT_POLYTOPE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "rank_table.h"

namespace pmkit {

using Rational = boost::rational<int64_t>;

// A point of R^E with exact rational coordinates, in ground order.
struct RationalPoint {
  std::vector<Rational> coords;

  static RationalPoint from_integers(std::span<const int64_t> values);
};

using LatticePoint = std::vector<int64_t>;

// 0 <= x(A) <= rho(A) for every A. Throws kDimensionMismatch.
bool in_independence_polytope(const RankTable& rho, const RationalPoint& x);
// Independence plus x(E) = rho(E).
bool in_base_polytope(const RankTable& rho, const RationalPoint& x);

bool in_independence_polytope(const RankTable& rho, std::span<const int64_t> x);
bool in_base_polytope(const RankTable& rho, std::span<const int64_t> x);

// Integer points of I_rho (or B_rho), lexicographic order.
std::vector<LatticePoint> lattice_points(const RankTable& rho, bool restrict_to_base);

// Distinct greedy vertices v_{σ(i)} = rho(σ(1..i)) - rho(σ(1..i-1)) over all
// orderings σ, lexicographic order.
std::vector<LatticePoint> base_vertices(const RankTable& rho);

// Vertices of I_rho: greedy vertices of every restriction, zero-padded.
std::vector<LatticePoint> independence_vertices(const RankTable& rho);

// The face of I_rho attached to the minor rho / contract \ del.
//
// Coordinates in `del` are pinned at 0. Coordinates in `contract` are pinned
// at the greedy point of rho|contract taken in ground order, which is
// (rho({e}))_{e ∈ contract} whenever the contracted elements are mutually
// separated. When they are not, pinning every contracted coordinate at its own
// singleton rank leaves the face empty; `literal_pin_feasible` records which
// case applies.
struct MinorFace {
  Subset contract;
  Subset del;
  std::vector<std::optional<int64_t>> pinned;  // per coordinate; nullopt = free
  bool literal_pin_feasible = false;
  // F: the face of the cube [0,k]^E, as one closed interval per coordinate.
  std::vector<std::pair<int64_t, int64_t>> cube_face;
  // Lattice points of the face, in full E-coordinates, lexicographic.
  std::vector<LatticePoint> points;
  // Lattice points of the face maximizing the coordinate sum.
  std::vector<LatticePoint> base_points;
};

// Throws kOverlappingSets if contract ∩ del ≠ ∅.
MinorFace minor_face(const RankTable& rho, Subset contract, Subset del);

// Drops the pinned coordinates of each face point. For a correct face this
// equals lattice_points(minor(rho, contract, del), false).
std::vector<LatticePoint> project_face(const MinorFace& face);

// 2-D picture of I_rho with its lattice points (|E| = 2 only).
std::string independence_polytope_svg(const RankTable& rho);

}  // namespace pmkit

#endif  // PMKIT_POLYTOPE_H_
