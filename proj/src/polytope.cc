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

#include "polytope.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace pmkit {
namespace {

void require_dimension(const RankTable& rho, size_t dim) {
  if (dim != static_cast<size_t>(rho.size())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(dim) + " coordinates, ground set has " +
                    std::to_string(rho.size()),
                {{"coordinates", dim}, {"ground", rho.size()}});
  }
}

template <typename T>
bool independent(const RankTable& rho, std::span<const T> x) {
  for (uint32_t s = 1; s < rho.ground().subset_count(); ++s) {
    T sum(0);
    for (int i : Subset(s).members()) sum += x[static_cast<size_t>(i)];
    if (sum < T(0) || sum > T(rho.rank(Subset(s)))) return false;
  }
  return true;
}

template <typename T>
T total(std::span<const T> x) {
  return std::accumulate(x.begin(), x.end(), T(0));
}

// Calls f on every integer point of the box prod [lo_i, hi_i], lexicographic.
template <typename F>
void for_each_box_point(const std::vector<int64_t>& lo, const std::vector<int64_t>& hi, F&& f) {
  const size_t n = lo.size();
  for (size_t i = 0; i < n; ++i) {
    if (lo[i] > hi[i]) return;
  }
  LatticePoint p = lo;
  for (;;) {
    f(p);
    size_t i = n;
    while (i > 0) {
      --i;
      if (p[i] < hi[i]) {
        ++p[i];
        for (size_t j = i + 1; j < n; ++j) p[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

RationalPoint RationalPoint::from_integers(std::span<const int64_t> values) {
  RationalPoint p;
  for (int64_t v : values) p.coords.emplace_back(v);
  return p;
}

bool in_independence_polytope(const RankTable& rho, const RationalPoint& x) {
  require_dimension(rho, x.coords.size());
  return independent<Rational>(rho, x.coords);
}

bool in_base_polytope(const RankTable& rho, const RationalPoint& x) {
  return in_independence_polytope(rho, x) &&
         total<Rational>(x.coords) == Rational(rho.total_rank());
}

bool in_independence_polytope(const RankTable& rho, std::span<const int64_t> x) {
  require_dimension(rho, x.size());
  return independent<int64_t>(rho, x);
}

bool in_base_polytope(const RankTable& rho, std::span<const int64_t> x) {
  return in_independence_polytope(rho, x) && total<int64_t>(x) == rho.total_rank();
}

std::vector<LatticePoint> lattice_points(const RankTable& rho, bool restrict_to_base) {
  const size_t n = static_cast<size_t>(rho.size());
  std::vector<int64_t> lo(n, 0), hi(n);
  for (size_t i = 0; i < n; ++i) hi[i] = rho.rank_of(static_cast<int>(i));
  std::vector<LatticePoint> out;
  for_each_box_point(lo, hi, [&](const LatticePoint& p) {
    if (restrict_to_base ? in_base_polytope(rho, p) : in_independence_polytope(rho, p)) {
      out.push_back(p);
    }
  });
  return out;
}

std::vector<LatticePoint> base_vertices(const RankTable& rho) {
  std::vector<int> order(static_cast<size_t>(rho.size()));
  std::iota(order.begin(), order.end(), 0);
  std::set<LatticePoint> seen;
  do {
    LatticePoint v(order.size(), 0);
    Subset prefix;
    for (int e : order) {
      const Subset next = prefix.with(e);
      v[static_cast<size_t>(e)] = rho.rank(next) - rho.rank(prefix);
      prefix = next;
    }
    seen.insert(std::move(v));
  } while (std::next_permutation(order.begin(), order.end()));
  return {seen.begin(), seen.end()};
}

std::vector<LatticePoint> independence_vertices(const RankTable& rho) {
  std::set<LatticePoint> seen;
  for (uint32_t s = 0; s < rho.ground().subset_count(); ++s) {
    const Subset keep(s);
    for (const auto& v : base_vertices(restrict_to(rho, keep))) {
      LatticePoint full(static_cast<size_t>(rho.size()), 0);
      size_t pos = 0;
      for (int i : keep.members()) full[static_cast<size_t>(i)] = v[pos++];
      seen.insert(std::move(full));
    }
  }
  return {seen.begin(), seen.end()};
}

MinorFace minor_face(const RankTable& rho, Subset contract, Subset del) {
  if (!(contract & del).empty()) {
    throw Error(ErrorCode::kOverlappingSets, "contract and delete sets overlap",
                {{"contract", rho.ground().labels_of(contract)},
                 {"delete", rho.ground().labels_of(del)}});
  }
  if (!(contract | del).is_subset_of(rho.full())) {
    throw Error(ErrorCode::kUnknownElement, "subset outside the ground set");
  }
  const size_t n = static_cast<size_t>(rho.size());
  MinorFace face;
  face.contract = contract;
  face.del = del;
  face.pinned.assign(n, std::nullopt);

  int64_t singleton_sum = 0;
  Subset prefix;
  for (int e : contract.members()) {
    const Subset next = prefix.with(e);
    face.pinned[static_cast<size_t>(e)] = rho.rank(next) - rho.rank(prefix);
    prefix = next;
    singleton_sum += rho.rank_of(e);
  }
  face.literal_pin_feasible = singleton_sum <= rho.rank(contract);
  for (int e : del.members()) face.pinned[static_cast<size_t>(e)] = 0;

  std::vector<int64_t> lo(n), hi(n);
  face.cube_face.resize(n);
  for (size_t i = 0; i < n; ++i) {
    if (face.pinned[i]) {
      lo[i] = hi[i] = *face.pinned[i];
      face.cube_face[i] = {*face.pinned[i], *face.pinned[i]};
    } else {
      lo[i] = 0;
      hi[i] = rho.rank_of(static_cast<int>(i));
      face.cube_face[i] = {0, rho.k()};
    }
  }
  int64_t best = -1;
  for_each_box_point(lo, hi, [&](const LatticePoint& p) {
    if (!in_independence_polytope(rho, p)) return;
    face.points.push_back(p);
    best = std::max(best, total<int64_t>(p));
  });
  for (const auto& p : face.points) {
    if (total<int64_t>(p) == best) face.base_points.push_back(p);
  }
  return face;
}

std::vector<LatticePoint> project_face(const MinorFace& face) {
  std::vector<LatticePoint> out;
  out.reserve(face.points.size());
  for (const auto& p : face.points) {
    LatticePoint q;
    for (size_t i = 0; i < p.size(); ++i) {
      if (!face.pinned[i]) q.push_back(p[i]);
    }
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string independence_polytope_svg(const RankTable& rho) {
  if (rho.size() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "SVG output needs exactly two elements",
                {{"ground", rho.size()}});
  }
  // Hull of the vertices of I_rho (Andrew's monotone chain).
  auto pts = independence_vertices(rho);
  auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<LatticePoint> hull;
  if (pts.size() <= 2) {
    hull = pts;
  } else {
    std::vector<LatticePoint> h(2 * pts.size());
    size_t m = 0;
    for (const auto& p : pts) {
      while (m >= 2 && cross(h[m - 2], h[m - 1], p) <= 0) --m;
      h[m++] = p;
    }
    for (size_t i = pts.size() - 1, t = m + 1; i-- > 0;) {
      while (m >= t && cross(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
      h[m++] = pts[i];
    }
    h.resize(m - 1);
    hull = std::move(h);
  }

  const int64_t k = std::max<int64_t>(rho.k(), 1);
  const int cell = 40, margin = 30;
  const int64_t side = k * cell;
  auto sx = [&](int64_t x) { return margin + x * cell; };
  auto sy = [&](int64_t y) { return margin + side - y * cell; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side + 2 * margin
      << "\" height=\"" << side + 2 * margin << "\">\n";
  for (int64_t i = 0; i <= k; ++i) {
    svg << "  <line x1=\"" << sx(i) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(i)
        << "\" y2=\"" << sy(k) << "\" stroke=\"#ccc\" stroke-dasharray=\"3,3\"/>\n";
    svg << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(i) << "\" x2=\"" << sx(k)
        << "\" y2=\"" << sy(i) << "\" stroke=\"#ccc\" stroke-dasharray=\"3,3\"/>\n";
  }
  svg << "  <polygon points=\"";
  for (size_t i = 0; i < hull.size(); ++i) {
    svg << (i ? " " : "") << sx(hull[i][0]) << "," << sy(hull[i][1]);
  }
  svg << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const auto& p : lattice_points(rho, false)) {
    svg << "  <circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1]) << "\" r=\"3\"/>\n";
  }
  svg << "  <text x=\"" << sx(k) + 8 << "\" y=\"" << sy(0) + 4 << "\">"
      << rho.ground().label(0) << "</text>\n";
  svg << "  <text x=\"" << sx(0) - 4 << "\" y=\"" << sy(k) - 10 << "\">"
      << rho.ground().label(1) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace pmkit
