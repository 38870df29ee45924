#pragma once

// All-pairs unit flows on graphs, their congestion, and the explicit
// routing schemes for hypercubes, punctured hypercubes, the hexagon and
// cartesian products.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "halfint/error.hpp"
#include "halfint/graph.hpp"
#include "halfint/rational.hpp"

namespace halfint::flow {

struct WeightedPath {
  std::vector<std::size_t> vertices;  // s ... t
  Rational weight;
};

struct Demand {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<WeightedPath> paths;
};

/// One unit of flow for every ordered pair of distinct vertices, stored
/// demand by demand.
struct Routing {
  Graph graph;
  std::vector<Demand> demands;
};

struct Validation {
  bool valid = true;
  std::string message;
  std::optional<std::pair<std::size_t, std::size_t>> pair;  // offending (s, t)
  std::optional<std::size_t> path_index;
};

/// Checks endpoints, arcs, positive weights summing to 1 per pair, and that
/// every ordered pair appears exactly once. Reports the first violation.
inline Validation validate(const Routing& r) {
  const std::size_t n = r.graph.vertex_count();
  auto fail = [](std::string msg, std::size_t s, std::size_t t, std::optional<std::size_t> path = {}) {
    return Validation{false, std::move(msg), std::pair{s, t}, path};
  };
  std::vector<char> seen(n * n, 0);
  for (const auto& d : r.demands) {
    const std::size_t s = d.source;
    const std::size_t t = d.target;
    if (s >= n || t >= n) return fail("demand endpoint out of range", s, t);
    if (s == t) return fail("demand from a vertex to itself", s, t);
    if (seen[s * n + t]) return fail("duplicate demand", s, t);
    seen[s * n + t] = 1;
    Rational total;
    for (std::size_t p = 0; p < d.paths.size(); ++p) {
      const auto& path = d.paths[p];
      if (path.weight.sign() <= 0) return fail("non-positive path weight", s, t, p);
      if (path.vertices.empty() || path.vertices.front() != s || path.vertices.back() != t) {
        return fail("path does not join the demand endpoints", s, t, p);
      }
      for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k) {
        if (!r.graph.has_edge(path.vertices[k], path.vertices[k + 1])) {
          return fail("path uses a missing arc", s, t, p);
        }
      }
      total += path.weight;
    }
    if (total != Rational(1)) return fail("non-unit demand", s, t);
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s != t && !seen[s * n + t]) return fail("missing demand", s, t);
    }
  }
  return {};
}

/// Total flow per arc, indexed by Graph::arc_id.
inline std::vector<Rational> arc_flows(const Routing& r) {
  std::vector<Rational> flow(r.graph.arc_count());
  for (const auto& d : r.demands) {
    for (const auto& path : d.paths) {
      for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k) {
        flow[r.graph.arc_id(path.vertices[k], path.vertices[k + 1])] += path.weight;
      }
    }
  }
  return flow;
}

struct CongestionReport {
  Rational max_arc_flow;
  std::size_t n = 0;
  Rational congestion;  // max_arc_flow / n
  Edge argmax_arc;      // (tail, head)
};

/// Maximum arc flow over n. Among arcs of maximum flow the one with the
/// lexicographically smallest (tail label, head label) is reported.
inline CongestionReport congestion(const Routing& r) {
  const Validation v = validate(r);
  if (!v.valid) throw UsageError("invalid routing: " + v.message);
  const auto flow = arc_flows(r);
  CongestionReport rep;
  rep.n = r.graph.vertex_count();
  if (flow.empty()) {
    rep.congestion = Rational(0);
    return rep;
  }
  std::size_t best = 0;
  for (std::size_t a = 1; a < flow.size(); ++a) {
    if (flow[a] > flow[best]) {
      best = a;
    } else if (flow[a] == flow[best]) {
      const auto [u, v2] = r.graph.arc(a);
      const auto [bu, bv] = r.graph.arc(best);
      if (std::pair{r.graph.label(u), r.graph.label(v2)} < std::pair{r.graph.label(bu), r.graph.label(bv)}) {
        best = a;
      }
    }
  }
  rep.max_arc_flow = flow[best];
  rep.congestion = flow[best] / Rational(static_cast<long>(rep.n));
  rep.argmax_arc = r.graph.arc(best);
  return rep;
}

/// A graph with congestion rho has edge expansion at least 1 / (2 rho).
inline Rational expansion_lower_bound(const CongestionReport& report) {
  if (report.congestion.sign() <= 0) throw UsageError("zero congestion: no lower bound");
  return (Rational(2) * report.congestion).inverse();
}

namespace detail {

/// Masks visited when flipping the differing coordinates of s to t in
/// increasing coordinate order.
inline std::vector<std::uint64_t> bitfix_masks(std::uint64_t s, std::uint64_t t, std::size_t d) {
  std::vector<std::uint64_t> out{s};
  std::uint64_t cur = s;
  for (std::size_t i = 0; i < d; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    if ((cur ^ t) & bit) {
      cur ^= bit;
      out.push_back(cur);
    }
  }
  return out;
}

}  // namespace detail

/// Q_d with one unit of flow per ordered pair along the path that fixes the
/// differing coordinates from first to last.
inline Routing bitfix_routing(std::size_t d) {
  if (d < 1 || d > 10) throw UsageError("bit-fixing routing needs 1 <= d <= 10");
  Routing r{hypercube(d), {}};
  const std::uint64_t n = std::uint64_t{1} << d;
  r.demands.reserve(n * (n - 1));
  for (std::uint64_t s = 0; s < n; ++s) {
    for (std::uint64_t t = 0; t < n; ++t) {
      if (s == t) continue;
      const auto masks = detail::bitfix_masks(s, t, d);
      r.demands.push_back({s, t, {{std::vector<std::size_t>(masks.begin(), masks.end()), Rational(1)}}});
    }
  }
  return r;
}

/// Bit-fixing flows on Q_d minus the origin and the all-ones vertex, with
/// detours around the removed vertices, plus the arcs each detour loads.
struct PuncturedRouting {
  Routing routing;
  std::vector<Edge> low_detour_arcs;   // arcs loaded by detours around the origin
  std::vector<Edge> high_detour_arcs;  // arcs loaded by detours around all-ones
  bool detour_sets_disjoint = false;
  bool within_hypothesis = false;  // d >= 4, where the two detour sets cannot meet
};

/// A path e_i -> 0 -> e_j (i < j) becomes e_i -> e_i + e_j -> e_j, and
/// symmetrically 1 - e_i -> 1 -> 1 - e_j becomes 1 - e_i -> 1 - e_i - e_j -> 1 - e_j.
/// Vertex mask m of Q_d has index m - 1 in the punctured graph.
inline PuncturedRouting punctured_routing(std::size_t d) {
  if (d < 3 || d > 10) throw UsageError("punctured routing needs 3 <= d <= 10");
  PuncturedRouting out;
  out.routing.graph = punctured_hypercube(d);
  const std::uint64_t full = (std::uint64_t{1} << d) - 1;
  std::set<Edge> low;
  std::set<Edge> high;
  auto& demands = out.routing.demands;
  demands.reserve((full - 1) * (full - 2));
  for (std::uint64_t s = 1; s < full; ++s) {
    for (std::uint64_t t = 1; t < full; ++t) {
      if (s == t) continue;
      const auto masks = detail::bitfix_masks(s, t, d);
      std::vector<std::size_t> path;
      path.reserve(masks.size());
      for (std::size_t k = 0; k < masks.size(); ++k) {
        const std::uint64_t m = masks[k];
        if (m == 0 || m == full) {
          // Interior vertex: swap the order of the two flips around it.
          const std::uint64_t before = masks[k - 1];
          const std::uint64_t after = masks[k + 1];
          const std::uint64_t detour = before ^ after ^ m;
          const std::size_t a = before - 1;
          const std::size_t b = detour - 1;
          const std::size_t c = after - 1;
          auto& loaded = (m == 0) ? low : high;
          loaded.insert({a, b});
          loaded.insert({b, c});
          path.push_back(b);
        } else {
          path.push_back(m - 1);
        }
      }
      demands.push_back({s - 1, t - 1, {{std::move(path), Rational(1)}}});
    }
  }
  out.low_detour_arcs.assign(low.begin(), low.end());
  out.high_detour_arcs.assign(high.begin(), high.end());
  std::vector<Edge> common;
  std::set_intersection(low.begin(), low.end(), high.begin(), high.end(), std::back_inserter(common));
  out.detour_sets_disjoint = common.empty();
  out.within_hypothesis = d >= 4;
  return out;
}

/// C_6 with unit flow on the shortest path for pairs at distance <= 2 and
/// half a unit on each of the two paths for antipodal pairs.
inline Routing hexagon_routing() {
  constexpr std::size_t n = 6;
  Routing r{cycle_graph(n), {}};
  auto walk = [](std::size_t s, std::size_t steps, bool forward) {
    std::vector<std::size_t> p{s};
    std::size_t cur = s;
    for (std::size_t k = 0; k < steps; ++k) {
      cur = forward ? (cur + 1) % n : (cur + n - 1) % n;
      p.push_back(cur);
    }
    return p;
  };
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      const std::size_t ahead = (t + n - s) % n;
      Demand d{s, t, {}};
      if (ahead == 3) {
        d.paths.push_back({walk(s, 3, true), Rational(1, 2)});
        d.paths.push_back({walk(s, 3, false), Rational(1, 2)});
      } else if (ahead < 3) {
        d.paths.push_back({walk(s, ahead, true), Rational(1)});
      } else {
        d.paths.push_back({walk(s, n - ahead, false), Rational(1)});
      }
      r.demands.push_back(std::move(d));
    }
  }
  return r;
}

/// Routing on G x H (vertex (u, v) has index u * n_H + v). Pairs inside one
/// copy of G or H reuse that factor's flow; any other pair (u, v) -> (u', v')
/// first travels in the copy of G at v to (u', v), then in the copy of H at
/// u' to (u', v'), combining every pair of factor paths with the product
/// of their weights.
inline Routing product_routing(const Routing& rg, const Routing& rh) {
  for (const Routing* r : {&rg, &rh}) {
    const Validation v = validate(*r);
    if (!v.valid) throw UsageError("invalid factor routing: " + v.message);
  }
  const std::size_t ng = rg.graph.vertex_count();
  const std::size_t nh = rh.graph.vertex_count();
  auto index_demands = [](const Routing& r) {
    const std::size_t n = r.graph.vertex_count();
    std::vector<const Demand*> idx(n * n, nullptr);
    for (const auto& d : r.demands) idx[d.source * n + d.target] = &d;
    return idx;
  };
  const auto gd = index_demands(rg);
  const auto hd = index_demands(rh);

  Routing out{cartesian_product(rg.graph, rh.graph), {}};
  out.demands.reserve(ng * nh * (ng * nh - 1));
  for (std::size_t s = 0; s < ng * nh; ++s) {
    const std::size_t u = s / nh;
    const std::size_t v = s % nh;
    for (std::size_t t = 0; t < ng * nh; ++t) {
      if (s == t) continue;
      const std::size_t u2 = t / nh;
      const std::size_t v2 = t % nh;
      Demand dem{s, t, {}};
      if (u == u2) {
        for (const auto& p : hd[v * nh + v2]->paths) {
          WeightedPath q{{}, p.weight};
          for (const std::size_t x : p.vertices) q.vertices.push_back(u * nh + x);
          dem.paths.push_back(std::move(q));
        }
      } else if (v == v2) {
        for (const auto& p : gd[u * ng + u2]->paths) {
          WeightedPath q{{}, p.weight};
          for (const std::size_t x : p.vertices) q.vertices.push_back(x * nh + v);
          dem.paths.push_back(std::move(q));
        }
      } else {
        for (const auto& pg : gd[u * ng + u2]->paths) {
          for (const auto& ph : hd[v * nh + v2]->paths) {
            WeightedPath q{{}, pg.weight * ph.weight};
            for (const std::size_t x : pg.vertices) q.vertices.push_back(x * nh + v);
            for (std::size_t k = 1; k < ph.vertices.size(); ++k) q.vertices.push_back(u2 * nh + ph.vertices[k]);
            dem.paths.push_back(std::move(q));
          }
        }
      }
      out.demands.push_back(std::move(dem));
    }
  }
  return out;
}

}  // namespace halfint::flow
