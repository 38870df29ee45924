#pragma once

// The half-integral polytope with a sparse cut at the middle of the cube:
// conv of the cube vertices in the two middle levels together with the
// centers of the ((d-1)/2)-faces of [0,1]^d lying outside the middle slab.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "halfint/error.hpp"
#include "halfint/rational.hpp"
#include "halfint/skeleton.hpp"

namespace halfint::xi {

/// Compact vertex encoding: coordinate i is 1/2 if bit i of `halves` is set,
/// 1 if bit i of `ones` is set, 0 otherwise.
struct VertexCode {
  std::uint64_t halves = 0;
  std::uint64_t ones = 0;

  /// Twice the coordinate sum.
  unsigned doubled_sum() const {
    return static_cast<unsigned>(std::popcount(halves) + 2 * std::popcount(ones));
  }

  RatPoint point(unsigned d) const {
    RatPoint p(d);
    for (unsigned i = 0; i < d; ++i) {
      if ((halves >> i) & 1) p[i] = Rational(1, 2);
      if ((ones >> i) & 1) p[i] = 1;
    }
    return p;
  }

  friend bool operator==(const VertexCode&, const VertexCode&) = default;
};

inline void check_dimension(unsigned d) {
  if (d < 3 || d % 4 != 3 || d > 63) throw UsageError("d must be ≡ 3 (mod 4)");
}

/// Visits every vertex code, integral vertices first (increasing mask),
/// then face centers grouped by their set of half coordinates.
template <typename Visitor>
void for_each_vertex(unsigned d, Visitor&& visit) {
  check_dimension(d);
  if (d > 31) throw UsageError("vertex enumeration limited to d <= 31");
  const unsigned m = (d - 1) / 2;
  const std::uint64_t full = (std::uint64_t{1} << d) - 1;

  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const auto level = static_cast<unsigned>(std::popcount(mask));
    if (level == m || level == m + 1) visit(VertexCode{0, mask});
  }

  // Face centers: exactly m half coordinates. The doubled sum is
  // m + 2k for k ones; it lies outside the doubled slab [2m, 2m + 2]
  // unless k == (d + 1) / 4.
  const unsigned middle_ones = (d + 1) / 4;
  for (std::uint64_t halves = (std::uint64_t{1} << m) - 1; halves <= full;) {
    const std::uint64_t rest = full & ~halves;
    // Enumerate all subsets of `rest` as the set of ones.
    std::uint64_t sub = 0;
    for (;;) {
      if (static_cast<unsigned>(std::popcount(sub)) != middle_ones) visit(VertexCode{halves, sub});
      if (sub == rest) break;
      sub = (sub - rest) & rest;
    }
    // Next combination with the same popcount (Gosper's hack).
    const std::uint64_t c = halves & (~halves + 1);
    const std::uint64_t r = halves + c;
    if (r == 0 || r > full) break;
    halves = (((r ^ halves) >> 2) / c) | r;
  }
}

struct Instance {
  unsigned d = 0;
  std::vector<VertexCode> codes;  // aligned with vertices
  PointSet vertices;
  Rational slab_low;   // (d - 1) / 2
  Rational slab_high;  // (d + 1) / 2
};

/// Materializes the vertex set. Points are ordered by coordinate sum, then
/// lexicographically, so the low side of the middle cut is a prefix.
inline Instance build(unsigned d) {
  check_dimension(d);
  if (d > 11) throw UsageError("vertex set too large to materialize for d > 11");
  std::vector<std::pair<RatPoint, VertexCode>> items;
  for_each_vertex(d, [&](const VertexCode& c) { items.emplace_back(c.point(d), c); });
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    const unsigned sa = a.second.doubled_sum();
    const unsigned sb = b.second.doubled_sum();
    if (sa != sb) return sa < sb;
    return a.first < b.first;
  });
  Instance inst;
  inst.d = d;
  std::vector<RatPoint> pts;
  pts.reserve(items.size());
  for (auto& [p, c] : items) {
    pts.push_back(std::move(p));
    inst.codes.push_back(c);
  }
  inst.vertices = PointSet(d, std::move(pts));
  inst.slab_low = Rational(static_cast<long>(d) - 1, 2);
  inst.slab_high = Rational(static_cast<long>(d) + 1, 2);
  return inst;
}

struct VertexCounts {
  Integer integral;  // cube vertices in the two middle levels
  Integer centers;   // face centers outside the slab
  Integer total() const { return integral + centers; }
};

/// Closed forms: C(d+1, (d+1)/2) integral vertices and
/// C(d, (d-1)/2) * (2^((d+1)/2) - C((d+1)/2, (d+1)/4)) face centers.
inline VertexCounts vertex_count_closed_form(unsigned d) {
  check_dimension(d);
  auto bin = [](unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
  };
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, (d + 1) / 2);
  return {bin(d + 1, (d + 1) / 2), bin(d, (d - 1) / 2) * (two_pow - bin((d + 1) / 2, (d + 1) / 4))};
}

/// Counts by enumeration, without materializing points.
inline VertexCounts vertex_count_enumerated(unsigned d) {
  std::uint64_t integral = 0;
  std::uint64_t centers = 0;
  for_each_vertex(d, [&](const VertexCode& c) { (c.halves ? centers : integral) += 1; });
  return {Integer(static_cast<unsigned long>(integral)), Integer(static_cast<unsigned long>(centers))};
}

/// A cube edge from level (d-1)/2 (`low`) to level (d+1)/2 (`high`).
struct CrossingEdge {
  std::uint64_t low = 0;
  std::uint64_t high = 0;

  std::pair<RatPoint, RatPoint> points(unsigned d) const {
    return {VertexCode{0, low}.point(d), VertexCode{0, high}.point(d)};
  }
  friend bool operator==(const CrossingEdge&, const CrossingEdge&) = default;
  friend auto operator<=>(const CrossingEdge&, const CrossingEdge&) = default;
};

/// The edges through the central hyperplane: every pair of cube vertices
/// at levels (d-1)/2 and (d+1)/2 that differ in one coordinate.
inline std::vector<CrossingEdge> crossing_edges(unsigned d) {
  check_dimension(d);
  if (d > 31) throw UsageError("crossing edge enumeration limited to d <= 31");
  const unsigned m = (d - 1) / 2;
  std::vector<CrossingEdge> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) != m) continue;
    for (unsigned i = 0; i < d; ++i) {
      if (!((mask >> i) & 1)) out.push_back({mask, mask | (std::uint64_t{1} << i)});
    }
  }
  return out;
}

inline Integer crossing_edge_count_closed_form(unsigned d) {
  check_dimension(d);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), d, (d - 1) / 2);
  return r * ((d + 1) / 2);
}

/// Sign-exact comparisons for the middle cut S = {sum <= (d-1)/2}.
struct CutSummary {
  unsigned d = 0;
  Integer subset_size;          // |S|, every vertex on the low side
  Integer center_only_size;     // half of the face-center count alone
  Integer boundary_size;        // crossing edges
  Rational ratio;               // boundary_size / subset_size
  Rational scaled_ratio_sq;     // ratio^2 * 2^d / d^2; < 1 iff ratio < d / sqrt(2)^d
  bool below_target = false;    // ratio < d / sqrt(2)^d
  // C(2k, k) <= 4^k / sqrt(pi k) with k = (d+1)/4, checked with pi <= 355/113.
  bool central_binomial_bound_holds = false;
  // C(2k, k) <= 2 sqrt(2)^(d+1) / (sqrt(pi) (d+1)), checked with
  // pi >= 355/113 - 10^-6 when it fails.
  bool typeset_central_binomial_bound_holds = false;
};

inline Rational pi_upper() { return Rational(355, 113); }
inline Rational pi_lower() { return Rational(355, 113) - Rational(1, 1000000); }

/// Closed-form analysis of the middle cut, valid for every admissible d.
inline CutSummary cut_report(unsigned d) {
  const VertexCounts counts = vertex_count_closed_form(d);
  CutSummary s;
  s.d = d;
  // x -> 1 - x swaps the two sides of the cut.
  s.subset_size = counts.total() / 2;
  s.center_only_size = counts.centers / 2;
  s.boundary_size = crossing_edge_count_closed_form(d);
  s.ratio = Rational(s.boundary_size, s.subset_size);
  const Rational dd(static_cast<long>(d));
  s.scaled_ratio_sq = s.ratio * s.ratio * pow2(d) / (dd * dd);
  s.below_target = s.scaled_ratio_sq < Rational(1);

  const unsigned long k = (d + 1) / 4;
  const Rational c = binomial(2 * k, k);
  // C^2 * pi * k <= 16^k, using the upper end of the pi enclosure.
  s.central_binomial_bound_holds =
      c * c * pi_upper() * Rational(static_cast<long>(k)) <= pow2(4 * k);
  // C^2 * pi * (d+1)^2 <= 4 * 2^(d+1); only declared false when it fails
  // even for the smallest admissible pi.
  const Rational d1(static_cast<long>(d) + 1);
  s.typeset_central_binomial_bound_holds = !(c * c * pi_lower() * d1 * d1 > Rational(4) * pow2(d + 1));
  return s;
}

}  // namespace halfint::xi
