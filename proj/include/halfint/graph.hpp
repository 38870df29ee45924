#pragma once

// Finite simple graphs, exact cut ratios, brute-force edge expansion and
// cartesian products.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "halfint/error.hpp"
#include "halfint/parallel.hpp"
#include "halfint/rational.hpp"

namespace halfint {

using Edge = std::pair<std::size_t, std::size_t>;

/// Immutable simple undirected graph with string vertex labels. Edges are
/// stored once as (i, j) with i < j, sorted.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> labels, std::vector<Edge> edges)
      : labels_(std::move(labels)), adjacency_(labels_.size()) {
    const std::size_t n = labels_.size();
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw UsageError("edge endpoint out of range");
      if (u == v) throw UsageError("loops are not allowed");
      if (u > v) std::swap(u, v);
      edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw UsageError("duplicate edge");
    }
    for (const auto& [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    arc_offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) arc_offsets_[v + 1] = arc_offsets_[v] + adjacency_[v].size();
  }

  /// Graph with labels "0", "1", ...
  static Graph with_index_labels(std::size_t n, std::vector<Edge> edges) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return Graph(std::move(labels), std::move(edges));
  }

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& nbrs : adjacency_) d = std::max(d, nbrs.size());
    return d;
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// Position of the arc u->v among all arcs ordered by (u, v); arcs of the
  /// bidirected graph are numbered 0 .. 2|E|-1.
  std::size_t arc_id(std::size_t u, std::size_t v) const {
    const auto& nbrs = adjacency_[u];
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    if (it == nbrs.end() || *it != v) throw UsageError("no arc between the given vertices");
    return arc_offsets_[u] + static_cast<std::size_t>(it - nbrs.begin());
  }

  std::size_t arc_count() const { return 2 * edges_.size(); }

  /// Inverse of arc_id.
  Edge arc(std::size_t id) const {
    const auto it = std::upper_bound(arc_offsets_.begin(), arc_offsets_.end(), id);
    const auto u = static_cast<std::size_t>(it - arc_offsets_.begin()) - 1;
    return {u, adjacency_[u][id - arc_offsets_[u]]};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> arc_offsets_;  // arcs leaving v start at arc_offsets_[v]
};

/// |boundary(S)| / min(|S|, |V \ S|) for one vertex subset.
struct CutReport {
  std::vector<std::size_t> subset;  // sorted vertex indices of S
  std::size_t boundary_size = 0;    // edges with exactly one endpoint in S
  std::size_t subset_size = 0;      // |S|
  Rational ratio;                   // boundary_size / min(|S|, n - |S|)
};

inline CutReport cut_ratio(const Graph& g, std::span<const std::size_t> subset) {
  const std::size_t n = g.vertex_count();
  std::vector<char> in(n, 0);
  for (const std::size_t v : subset) {
    if (v >= n) throw UsageError("cut vertex out of range");
    in[v] = 1;
  }
  CutReport report;
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v]) report.subset.push_back(v);
  }
  report.subset_size = report.subset.size();
  if (report.subset_size == 0 || report.subset_size == n) throw UsageError("degenerate cut");
  for (const auto& [u, v] : g.edges()) {
    if (in[u] != in[v]) ++report.boundary_size;
  }
  const std::size_t denom = std::min(report.subset_size, n - report.subset_size);
  report.ratio = Rational(static_cast<long>(report.boundary_size), static_cast<long>(denom));
  return report;
}

struct ExpansionOptions {
  std::size_t max_vertices = 26;
  unsigned threads = 0;
};

struct ExpansionResult {
  Rational value;
  CutReport witness;
};

namespace detail {

struct CutCandidate {
  std::uint64_t boundary = 0;
  std::uint64_t size = 0;
  std::uint64_t mask = 0;
  bool valid = false;

  // Strict order by (ratio, mask).
  bool better_than(const CutCandidate& o) const {
    if (!o.valid) return valid;
    if (!valid) return false;
    const std::uint64_t lhs = boundary * o.size;
    const std::uint64_t rhs = o.boundary * size;
    if (lhs != rhs) return lhs < rhs;
    return mask < o.mask;
  }
};

}  // namespace detail

/// Exact edge expansion by scanning every subset with |S| <= n/2.
///
/// Subsets are visited in Gray-code order so the boundary is updated in
/// O(1) per step. The scan is split into contiguous Gray-code ranges that
/// can run on separate threads; ties are broken by the smallest bitmask
/// (bit v set iff vertex v is in S), so the witness does not depend on the
/// schedule.
inline ExpansionResult expansion_bruteforce(const Graph& g, const ExpansionOptions& options = {}) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw UsageError("expansion needs at least 2 vertices");
  if (n > options.max_vertices || n > 62) throw UsageError("instance too large for exact search");

  std::vector<std::uint64_t> adj(n, 0);
  std::vector<std::uint64_t> deg(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  for (std::size_t v = 0; v < n; ++v) deg[v] = static_cast<std::uint64_t>(std::popcount(adj[v]));

  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t half = n / 2;
  const unsigned threads = resolve_threads(options.threads);
  const std::uint64_t n_chunks = std::min<std::uint64_t>(total, std::uint64_t{threads} * 8);
  const std::uint64_t chunk_len = (total + n_chunks - 1) / n_chunks;
  std::vector<detail::CutCandidate> best(n_chunks);

  parallel_for(n_chunks, threads, [&](std::size_t chunk) {
    const std::uint64_t begin = chunk * chunk_len;
    const std::uint64_t end = std::min(total, begin + chunk_len);
    if (begin >= end) return;
    std::uint64_t mask = begin ^ (begin >> 1);
    std::uint64_t boundary = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v) & 1) boundary += static_cast<std::uint64_t>(std::popcount(adj[v] & ~mask));
    }
    detail::CutCandidate local;
    for (std::uint64_t k = begin;;) {
      const auto size = static_cast<std::uint64_t>(std::popcount(mask));
      if (size > 0 && size <= half) {
        const detail::CutCandidate cand{boundary, size, mask, true};
        if (cand.better_than(local)) local = cand;
      }
      if (++k == end) break;
      const auto v = static_cast<std::size_t>(std::countr_zero(k));
      const std::uint64_t bit = std::uint64_t{1} << v;
      const auto inside = static_cast<std::uint64_t>(std::popcount(adj[v] & mask));
      if (mask & bit) {
        boundary = boundary + 2 * inside - deg[v];
      } else {
        boundary = boundary + deg[v] - 2 * inside;
      }
      mask ^= bit;
    }
    best[chunk] = local;
  });

  detail::CutCandidate winner;
  for (const auto& c : best) {
    if (c.better_than(winner)) winner = c;
  }
  std::vector<std::size_t> subset;
  for (std::size_t v = 0; v < n; ++v) {
    if ((winner.mask >> v) & 1) subset.push_back(v);
  }
  CutReport report = cut_ratio(g, subset);
  return {report.ratio, std::move(report)};
}

/// G x H on vertex pairs (u, v) numbered u * n_H + v, labelled "u|v".
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.vertex_count();
  const std::size_t nh = h.vertex_count();
  std::vector<std::string> labels;
  labels.reserve(ng * nh);
  for (std::size_t u = 0; u < ng; ++u) {
    for (std::size_t v = 0; v < nh; ++v) labels.push_back(g.label(u) + "|" + h.label(v));
  }
  std::vector<Edge> edges;
  edges.reserve(ng * h.edge_count() + nh * g.edge_count());
  for (std::size_t u = 0; u < ng; ++u) {
    for (const auto& [a, b] : h.edges()) edges.emplace_back(u * nh + a, u * nh + b);
  }
  for (const auto& [a, b] : g.edges()) {
    for (std::size_t v = 0; v < nh; ++v) edges.emplace_back(a * nh + v, b * nh + v);
  }
  return Graph(std::move(labels), std::move(edges));
}

/// Whether `map` (vertex of g -> vertex of h) is an isomorphism. Throws if
/// it is not a bijection.
inline bool is_isomorphic_via(const Graph& g, const Graph& h, std::span<const std::size_t> map) {
  const std::size_t n = g.vertex_count();
  if (map.size() != n || h.vertex_count() != n) throw UsageError("map is not a bijection");
  std::vector<char> hit(n, 0);
  for (const std::size_t v : map) {
    if (v >= n || hit[v]) throw UsageError("map is not a bijection");
    hit[v] = 1;
  }
  if (g.edge_count() != h.edge_count()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return h.has_edge(map[e.first], map[e.second]); });
}

// Standard families.

/// Q_d on bitmasks: coordinate i of vertex v is bit i. Labels list the
/// coordinates in order, e.g. "011" for coordinates (0,1,1).
inline std::string cube_label(std::uint64_t mask, std::size_t d) {
  std::string s(d, '0');
  for (std::size_t i = 0; i < d; ++i) {
    if ((mask >> i) & 1) s[i] = '1';
  }
  return s;
}

inline Graph hypercube(std::size_t d) {
  if (d > 20) throw UsageError("hypercube dimension too large");
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::string> labels(n);
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    labels[v] = cube_label(v, d);
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t w = v ^ (std::size_t{1} << i);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph(std::move(labels), std::move(edges));
}

/// Q_d without the origin and the all-ones vertex; vertex mask m has index m - 1.
inline Graph punctured_hypercube(std::size_t d) {
  if (d < 2 || d > 20) throw UsageError("punctured hypercube dimension out of range");
  const std::size_t full = (std::size_t{1} << d) - 1;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < full; ++v) {
    labels.push_back(cube_label(v, d));
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t w = v ^ (std::size_t{1} << i);
      if (v < w && w != full && w != 0) edges.emplace_back(v - 1, w - 1);
    }
  }
  return Graph(std::move(labels), std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw UsageError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::with_index_labels(n, std::move(edges));
}

/// Path with `edge_count` edges on edge_count + 1 vertices.
inline Graph path_graph(std::size_t edge_count) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edge_count; ++i) edges.emplace_back(i, i + 1);
  return Graph::with_index_labels(edge_count + 1, std::move(edges));
}

/// Disjoint union; labels are prefixed with the operand number ("0:", "1:").
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("0:" + l);
  for (const auto& l : b.labels()) labels.push_back("1:" + l);
  std::vector<Edge> edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  return Graph(std::move(labels), std::move(edges));
}

/// Graphviz rendering: undirected, labels as node names.
inline std::string to_dot(const Graph& g, const std::string& name = "G") {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "graph " + name + " {\n";
  for (const auto& l : g.labels()) out += "  " + quote(l) + ";\n";
  for (const auto& [u, v] : g.edges()) out += "  " + quote(g.label(u)) + " -- " + quote(g.label(v)) + ";\n";
  return out + "}\n";
}

}  // namespace halfint
