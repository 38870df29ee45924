#pragma once

// Vertices and edges of conv(points) through exact LP oracles.

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "halfint/graph.hpp"
#include "halfint/lp.hpp"
#include "halfint/parallel.hpp"
#include "halfint/rational.hpp"

namespace halfint {

/// Pairwise distinct points of one ambient dimension.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dim, std::vector<RatPoint> points) : dim_(dim), points_(std::move(points)) {
    std::vector<const RatPoint*> sorted;
    sorted.reserve(points_.size());
    for (const auto& p : points_) {
      if (p.dim() != dim_) throw UsageError("point of wrong dimension");
      sorted.push_back(&p);
    }
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (*sorted[i] == *sorted[i - 1]) throw UsageError("duplicate point " + sorted[i]->str());
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const RatPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<RatPoint>& points() const { return points_; }

  PointSet subset(const std::vector<std::size_t>& indices) const {
    std::vector<RatPoint> pts;
    pts.reserve(indices.size());
    for (const std::size_t i : indices) pts.push_back(points_.at(i));
    return PointSet(dim_, std::move(pts));
  }

 private:
  std::size_t dim_ = 0;
  std::vector<RatPoint> points_;
};

struct HullOptions {
  unsigned threads = 0;
  /// Skip the LP for pairs whose midpoint is also the midpoint of a
  /// disjoint pair; such pairs are never edges.
  bool midpoint_prefilter = true;
};

namespace detail {

inline std::vector<RatPoint> all_but(const PointSet& ps, std::size_t skip_a, std::size_t skip_b) {
  std::vector<RatPoint> others;
  others.reserve(ps.size());
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k != skip_a && k != skip_b) others.push_back(ps[k]);
  }
  return others;
}

/// Feasibility of: sum_k w_k q_k = a p_i + b p_j, sum w = 1, a + b = 1,
/// w, a, b >= 0, where q ranges over the points other than i and j. That
/// is, whether conv(others) meets the segment [p_i, p_j].
inline bool segment_meets_hull_of_others(const PointSet& ps, std::size_t i, std::size_t j) {
  const std::size_t d = ps.dim();
  const std::size_t n_others = ps.size() - 2;
  LinearSystem sys{RatMatrix(d + 2, n_others + 2), std::vector<Rational>(d + 2)};
  std::size_t col = 0;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k == i || k == j) continue;
    for (std::size_t r = 0; r < d; ++r) sys.a(r, col) = ps[k][r];
    sys.a(d, col) = 1;
    ++col;
  }
  for (std::size_t r = 0; r < d; ++r) {
    sys.a(r, col) = -ps[i][r];
    sys.a(r, col + 1) = -ps[j][r];
  }
  sys.a(d + 1, col) = 1;
  sys.a(d + 1, col + 1) = 1;
  sys.b[d] = 1;
  sys.b[d + 1] = 1;
  return lp_feasible(sys).feasible;
}

}  // namespace detail

/// Indices of points that are not convex combinations of the other points
/// (one LP per point).
inline std::vector<std::size_t> hull_vertices(const PointSet& ps, const HullOptions& options = {}) {
  std::vector<char> is_vertex(ps.size(), 0);
  parallel_for(ps.size(), options.threads, [&](std::size_t i) {
    if (ps.size() == 1) {
      is_vertex[i] = 1;
      return;
    }
    const auto others = detail::all_but(ps, i, i);
    is_vertex[i] = in_convex_hull(ps[i], others) ? 0 : 1;
  });
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (is_vertex[i]) out.push_back(i);
  }
  return out;
}

/// All pairs {i, j}, i < j, such that [p_i, p_j] is an edge of conv(ps).
///
/// For vertices p_i, p_j the segment is an edge exactly when the hull of
/// the remaining points does not meet it; this holds without any general
/// position assumption. Every point must be a hull vertex.
inline std::vector<Edge> hull_edges(const PointSet& ps, const HullOptions& options = {}) {
  const std::size_t n = ps.size();
  if (hull_vertices(ps, options).size() != n) throw UsageError("non-vertex point present");

  std::vector<Edge> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  if (n <= 2) return pairs;

  std::vector<char> decided(pairs.size(), 0);
  if (options.midpoint_prefilter) {
    // A shared pair-sum p_i + p_j = p_k + p_l forces {k, l} disjoint from
    // {i, j} because the points are distinct.
    std::unordered_map<RatPoint, std::size_t> sum_count;
    sum_count.reserve(pairs.size());
    std::vector<RatPoint> sums;
    sums.reserve(pairs.size());
    for (const auto& [i, j] : pairs) {
      sums.push_back(ps[i] + ps[j]);
      ++sum_count[sums.back()];
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (sum_count[sums[k]] > 1) decided[k] = 1;
    }
  }

  std::vector<char> is_edge(pairs.size(), 0);
  parallel_for(
      pairs.size(), options.threads,
      [&](std::size_t k) {
        if (decided[k]) return;
        const auto [i, j] = pairs[k];
        is_edge[k] = detail::segment_meets_hull_of_others(ps, i, j) ? 0 : 1;
      },
      16);

  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (is_edge[k]) edges.push_back(pairs[k]);
  }
  return edges;
}

/// Graph of conv(ps): vertex labels are the serialized points.
inline Graph skeleton_graph(const PointSet& ps, const HullOptions& options = {}) {
  auto edges = hull_edges(ps, options);
  std::vector<std::string> labels;
  labels.reserve(ps.size());
  for (const auto& p : ps.points()) labels.push_back(p.str());
  return Graph(std::move(labels), std::move(edges));
}

}  // namespace halfint
