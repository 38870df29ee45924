#pragma once

// Zonotopes presented by generators: vertex enumeration, half-integrality,
// and recognition of half-integral zonotopes as graphical zonotopes of
// graphs whose vertices have degree at most two.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halfint/error.hpp"
#include "halfint/graph.hpp"
#include "halfint/linalg.hpp"
#include "halfint/lp.hpp"
#include "halfint/parallel.hpp"
#include "halfint/rational.hpp"
#include "halfint/skeleton.hpp"

namespace halfint::zono {

/// Canonical generators: nonzero, pairwise non-collinear, first nonzero
/// coordinate positive.
class GeneratorSet {
 public:
  GeneratorSet() = default;

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return gens_.size(); }
  const RatPoint& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<RatPoint>& generators() const { return gens_; }

  friend GeneratorSet canonicalize(std::size_t dim, std::vector<RatPoint> raw);

 private:
  std::size_t dim_ = 0;
  std::vector<RatPoint> gens_;
};

inline bool collinear(const RatPoint& a, const RatPoint& b) {
  const std::size_t la = a.leading_index();
  if (la != b.leading_index()) return false;
  if (la == a.dim()) return true;
  // b == (b_l / a_l) a
  const Rational s = b[la] / a[la];
  for (std::size_t i = la; i < a.dim(); ++i) {
    if (b[i] != s * a[i]) return false;
  }
  return true;
}

/// Flips each vector so its first nonzero coordinate is positive. Order is
/// preserved. Rejects zero vectors and collinear pairs.
inline GeneratorSet canonicalize(std::size_t dim, std::vector<RatPoint> raw) {
  GeneratorSet gs;
  gs.dim_ = dim;
  for (auto& g : raw) {
    if (g.dim() != dim) throw UsageError("generator of wrong dimension");
    const std::size_t lead = g.leading_index();
    if (lead == dim) throw UsageError("zero generator not permitted");
    if (g[lead].sign() < 0) g = -g;
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (collinear(raw[i], raw[j])) throw UsageError("collinear generators not permitted");
    }
  }
  gs.gens_ = std::move(raw);
  return gs;
}

struct VertexOptions {
  std::size_t max_generators = 20;
  unsigned threads = 0;
};

/// Vertices of sum_i conv{0, g_i}, each with the sign vector that selects
/// it: bit i set iff some direction c has c . g_i > 0 at that vertex.
struct ZonotopeVertices {
  PointSet points;                       // sorted lexicographically
  std::vector<std::uint64_t> sign_masks;  // aligned with points
};

namespace detail {

/// Is there c with c . g_i >= 1 for bits set in `mask` and c . g_i <= -1
/// otherwise? Variables: c = c+ - c-, one surplus per generator.
inline bool sign_vector_realizable(const GeneratorSet& gs, std::uint64_t mask) {
  const std::size_t d = gs.dim();
  const std::size_t m = gs.size();
  LinearSystem sys{RatMatrix(m, 2 * d + m), std::vector<Rational>(m, Rational(1))};
  for (std::size_t i = 0; i < m; ++i) {
    const bool positive = (mask >> i) & 1;
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& v = gs[i][k];
      if (v.is_zero()) continue;
      sys.a(i, k) = positive ? v : -v;
      sys.a(i, d + k) = positive ? -v : v;
    }
    sys.a(i, 2 * d + i) = -1;
  }
  return lp_feasible(sys).feasible;
}

}  // namespace detail

/// Enumerates all 2^m sign vectors and keeps those cut out by some strict
/// linear functional (one LP each). A sign vector is realizable iff its
/// complement is, so only masks with the top bit clear are solved.
inline ZonotopeVertices zonotope_vertices(const GeneratorSet& gs, const VertexOptions& options = {}) {
  const std::size_t m = gs.size();
  if (m > options.max_generators || m > 40) throw UsageError("too many generators for sign-vector enumeration");
  std::vector<std::uint64_t> masks;
  if (m == 0) {
    masks.push_back(0);
  } else {
    const std::uint64_t half = std::uint64_t{1} << (m - 1);
    std::vector<char> ok(half, 0);
    parallel_for(half, options.threads,
                 [&](std::size_t k) { ok[k] = detail::sign_vector_realizable(gs, k) ? 1 : 0; }, 64);
    const std::uint64_t full = (half << 1) - 1;
    for (std::uint64_t k = 0; k < half; ++k) {
      if (!ok[k]) continue;
      masks.push_back(k);
      masks.push_back(full & ~k);
    }
  }
  std::vector<std::pair<RatPoint, std::uint64_t>> items;
  items.reserve(masks.size());
  for (const std::uint64_t mask : masks) {
    RatPoint v(gs.dim());
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) v += gs[i];
    }
    items.emplace_back(std::move(v), mask);
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              items.end());
  ZonotopeVertices out;
  std::vector<RatPoint> pts;
  for (auto& [p, mask] : items) {
    pts.push_back(std::move(p));
    out.sign_masks.push_back(mask);
  }
  out.points = PointSet(gs.dim(), std::move(pts));
  return out;
}

/// One failed per-coordinate condition of the generator budget.
struct BudgetViolation {
  std::size_t coordinate = 0;  // 0-based
  std::string reason;
};

struct BudgetVerdict {
  bool pass = true;
  std::vector<BudgetViolation> violations;
};

/// Necessary condition for half-integrality, per coordinate i: at most two
/// generators are nonzero in i, two such entries both have absolute value
/// 1/2, and sum_g |g_i| <= 1 (the projection of the zonotope onto axis i
/// has length sum_g |g_i| and must fit in [0, 1]).
inline BudgetVerdict coordinate_budget(const GeneratorSet& gs) {
  BudgetVerdict verdict;
  const Rational half(1, 2);
  for (std::size_t i = 0; i < gs.dim(); ++i) {
    std::size_t nonzero = 0;
    bool all_half = true;
    Rational length;
    for (const auto& g : gs.generators()) {
      if (g[i].is_zero()) continue;
      ++nonzero;
      length += g[i].abs();
      if (g[i].abs() != half) all_half = false;
    }
    std::string reason;
    if (nonzero > 2) {
      reason = std::to_string(nonzero) + " generators are nonzero in this coordinate";
    } else if (nonzero == 2 && !all_half) {
      reason = "two generators are nonzero but not both of absolute value 1/2";
    } else if (length > Rational(1)) {
      reason = "projected length " + length.str() + " exceeds 1";
    }
    if (!reason.empty()) {
      verdict.pass = false;
      verdict.violations.push_back({i, std::move(reason)});
    }
  }
  return verdict;
}

struct HalfIntegralVerdict {
  bool half_integral = false;
  std::optional<RatPoint> translation;  // added to every vertex; set iff half_integral
};

/// Translates the zonotope so every coordinate has minimum 0 over the
/// vertices and checks that every coordinate is then 0, 1/2 or 1.
inline HalfIntegralVerdict is_half_integral(const GeneratorSet& gs, const VertexOptions& options = {}) {
  const ZonotopeVertices zv = zonotope_vertices(gs, options);
  const std::size_t d = gs.dim();
  RatPoint shift(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational lo = zv.points[0][i];
    for (const auto& p : zv.points.points()) lo = std::min(lo, p[i]);
    shift[i] = -lo;
  }
  const Rational half(1, 2);
  const Rational one(1);
  for (const auto& p : zv.points.points()) {
    for (std::size_t i = 0; i < d; ++i) {
      const Rational x = p[i] + shift[i];
      if (!x.is_zero() && x != half && x != one) return {false, std::nullopt};
    }
  }
  return {true, std::move(shift)};
}

/// Witness that a circuit block is affinely the graphical zonotope of a
/// cycle. With x the last member of the block, sum_{g != x} lambda_g g = x;
/// the linear map sending lambda_g g (the i-th non-x member, in order) to
/// e_i - e_{i+1} sends x to e_1 - e_k.
struct CycleWitness {
  std::vector<std::size_t> members;  // generator indices, increasing
  std::vector<int> lambda;           // +-1, aligned with members; +1 for x
  std::vector<Edge> target_edges;    // (i, i+1) for non-x members, (0, k-1) for x
};

struct Decomposition {
  std::vector<std::vector<std::size_t>> circuit_blocks;
  std::vector<std::vector<Rational>> circuit_coefficients;  // +-1, aligned with blocks
  std::vector<std::size_t> independent_block;
  std::vector<std::vector<std::size_t>> block_supports;  // circuits, then independent block
  std::vector<CycleWitness> witnesses;                   // one per circuit block
  Graph graph;  // disjoint cycles, then one path with |independent_block| edges
  std::vector<std::size_t> edge_of_generator;  // generator index -> edge index in graph

  std::vector<std::size_t> cycle_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& b : circuit_blocks) out.push_back(b.size());
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct RecognizeOptions {
  bool check_half_integral = true;
  VertexOptions vertex_options{};
};

namespace detail {

inline std::vector<std::size_t> support_of(const GeneratorSet& gs, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gs.dim(); ++i) {
    for (const std::size_t g : members) {
      if (!gs[g][i].is_zero()) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

/// Splits the generators into minimal circuits plus an independent rest and
/// returns the graph whose graphical zonotope is affinely equivalent.
///
/// Every circuit must have +-1 coefficients and a coordinate support that
/// no other generator touches; both hold for half-integral input, so a
/// failure raises PreconditionError.
inline Decomposition recognize_graphical(const GeneratorSet& gs, const RecognizeOptions& options = {}) {
  if (options.check_half_integral) {
    const BudgetVerdict budget = coordinate_budget(gs);
    if (!budget.pass) {
      throw PreconditionError("input not half-integral: coordinate budget violated at coordinate " +
                              std::to_string(budget.violations.front().coordinate) + " (" +
                              budget.violations.front().reason + ")");
    }
    if (!is_half_integral(gs, options.vertex_options).half_integral) {
      throw PreconditionError("input not half-integral: vertex coordinates outside {0, 1/2, 1}");
    }
  }

  Decomposition dec;
  std::vector<std::size_t> remaining(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) remaining[i] = i;

  for (;;) {
    std::vector<RatPoint> sub;
    sub.reserve(remaining.size());
    for (const std::size_t i : remaining) sub.push_back(gs[i]);
    const auto circuit = minimal_circuit(sub);
    if (!circuit) break;

    std::vector<std::size_t> block;
    for (const std::size_t k : circuit->indices) block.push_back(remaining[k]);
    for (const auto& c : circuit->coefficients) {
      if (c.abs() != Rational(1)) {
        throw PreconditionError("circuit coefficients not ±1: input not half-integral");
      }
    }
    const auto support = detail::support_of(gs, block);
    for (const std::size_t g : remaining) {
      if (std::binary_search(block.begin(), block.end(), g)) continue;
      for (const std::size_t i : support) {
        if (!gs[g][i].is_zero()) {
          throw PreconditionError("circuit support overlaps the remaining generators at coordinate " +
                                  std::to_string(i) + ": input not half-integral");
        }
      }
    }

    CycleWitness w;
    w.members = block;
    const int x_sign = circuit->coefficients.back().sign();
    const std::size_t k = block.size();
    for (std::size_t t = 0; t < k; ++t) {
      // sum c_g g = 0  =>  x = sum_{g != x} (-c_g / c_x) g
      w.lambda.push_back(t + 1 == k ? 1 : -circuit->coefficients[t].sign() * x_sign);
      w.target_edges.push_back(t + 1 == k ? Edge{0, k - 1} : Edge{t, t + 1});
    }
    dec.witnesses.push_back(std::move(w));
    dec.circuit_blocks.push_back(block);
    dec.circuit_coefficients.push_back(circuit->coefficients);
    dec.block_supports.push_back(support);

    std::vector<std::size_t> next;
    for (const std::size_t g : remaining) {
      if (!std::binary_search(block.begin(), block.end(), g)) next.push_back(g);
    }
    remaining = std::move(next);
  }
  dec.independent_block = remaining;
  dec.block_supports.push_back(detail::support_of(gs, remaining));

  // Graph: cycles in block order, then the path.
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, std::size_t>> edge_generator;
  for (std::size_t b = 0; b < dec.circuit_blocks.size(); ++b) {
    const std::size_t base = labels.size();
    const auto& w = dec.witnesses[b];
    for (std::size_t t = 0; t < w.members.size(); ++t) {
      labels.push_back("c" + std::to_string(b) + "." + std::to_string(t));
    }
    for (std::size_t t = 0; t < w.members.size(); ++t) {
      const Edge e{base + w.target_edges[t].first, base + w.target_edges[t].second};
      edges.push_back(e);
      edge_generator.emplace_back(e, w.members[t]);
    }
  }
  if (!remaining.empty()) {
    const std::size_t base = labels.size();
    for (std::size_t t = 0; t <= remaining.size(); ++t) labels.push_back("p." + std::to_string(t));
    for (std::size_t t = 0; t < remaining.size(); ++t) {
      const Edge e{base + t, base + t + 1};
      edges.push_back(e);
      edge_generator.emplace_back(e, remaining[t]);
    }
  }
  dec.graph = Graph(std::move(labels), std::move(edges));
  dec.edge_of_generator.assign(gs.size(), 0);
  for (const auto& [e, g] : edge_generator) {
    const auto& all = dec.graph.edges();
    dec.edge_of_generator[g] = static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), e) - all.begin());
  }
  return dec;
}

/// True iff sum_{g != x} lambda_g g == x for the witness's block.
inline bool check_witness(const GeneratorSet& gs, const CycleWitness& w) {
  RatPoint acc(gs.dim());
  for (std::size_t t = 0; t + 1 < w.members.size(); ++t) {
    acc += Rational(w.lambda[t]) * gs[w.members[t]];
  }
  return acc == gs[w.members.back()];
}

/// One generator e_i - e_j per edge {i, j} (i < j), in edge order.
inline GeneratorSet graphical_generators(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<RatPoint> gens;
  for (const auto& [i, j] : g.edges()) {
    RatPoint v(n);
    v[i] = 1;
    v[j] = -1;
    gens.push_back(std::move(v));
  }
  return canonicalize(n, std::move(gens));
}

/// Connected components of a graph of maximum degree <= 2.
struct ComponentSummary {
  std::vector<std::size_t> cycle_lengths;  // sorted
  std::size_t path_edges = 0;              // total over all path components

  friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

struct Component {
  bool is_cycle = false;
  std::vector<std::size_t> vertices;  // in walk order
};

inline std::vector<Component> degree_two_components(const Graph& g) {
  if (g.max_degree() > 2) throw PreconditionError("graph has a vertex of degree > 2");
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Component> out;
  auto walk = [&](std::size_t start) {
    Component c;
    std::size_t prev = n;
    std::size_t cur = start;
    for (;;) {
      seen[cur] = 1;
      c.vertices.push_back(cur);
      std::size_t next = n;
      for (const std::size_t w : g.neighbors(cur)) {
        if (w != prev && !seen[w]) {
          next = w;
          break;
        }
      }
      if (next == n) {
        c.is_cycle = c.vertices.size() >= 3 && g.has_edge(cur, start);
        return c;
      }
      prev = cur;
      cur = next;
    }
  };
  // Paths from their endpoints first, then whatever is left is a cycle.
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v] && g.degree(v) <= 1) out.push_back(walk(v));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) out.push_back(walk(v));
  }
  return out;
}

inline ComponentSummary summarize_components(const Graph& g) {
  ComponentSummary s;
  for (const auto& c : degree_two_components(g)) {
    if (c.is_cycle) {
      s.cycle_lengths.push_back(c.vertices.size());
    } else {
      s.path_edges += c.vertices.size() - 1;
    }
  }
  std::sort(s.cycle_lengths.begin(), s.cycle_lengths.end());
  return s;
}

/// Half-integral generators whose zonotope is affinely Z(g): a cycle on k
/// vertices becomes (1/2)(e_i - e_{i+1}) and (1/2)(e_1 - e_k) in k fresh
/// coordinates, a path with k edges becomes k fresh unit vectors. Cycles
/// take the leading coordinates, paths follow.
inline GeneratorSet realize_half_integral(const Graph& g) {
  auto comps = degree_two_components(g);
  std::stable_partition(comps.begin(), comps.end(), [](const Component& c) { return c.is_cycle; });
  std::size_t dim = 0;
  for (const auto& c : comps) dim += c.is_cycle ? c.vertices.size() : c.vertices.size() - 1;
  std::vector<RatPoint> gens;
  std::size_t base = 0;
  const Rational half(1, 2);
  for (const auto& c : comps) {
    const std::size_t k = c.vertices.size();
    if (c.is_cycle) {
      for (std::size_t i = 0; i + 1 < k; ++i) {
        RatPoint v(dim);
        v[base + i] = half;
        v[base + i + 1] = -half;
        gens.push_back(std::move(v));
      }
      RatPoint v(dim);
      v[base] = half;
      v[base + k - 1] = -half;
      gens.push_back(std::move(v));
      base += k;
    } else {
      for (std::size_t i = 0; i + 1 < k; ++i) gens.push_back(RatPoint::unit(dim, base + i));
      base += k - 1;
    }
  }
  return canonicalize(dim, std::move(gens));
}

/// Vertex map from the zonotope of a single circuit (all m generators
/// dependent, every proper subset independent) onto the m-cube minus two
/// antipodal vertices. Negating the generators with coefficient -1 makes the
/// circuit sum to zero, which only translates the zonotope; the sign vector
/// of a vertex then becomes its cube vertex. Entry k is the index in
/// punctured_hypercube(m) of zonotope vertex k.
inline std::vector<std::size_t> punctured_cube_map(const GeneratorSet& gs, const ZonotopeVertices& zv) {
  const auto circuit = minimal_circuit(gs.generators());
  if (!circuit || circuit->indices.size() != gs.size()) {
    throw PreconditionError("generators do not form a single circuit");
  }
  std::uint64_t flip = 0;
  for (std::size_t k = 0; k < circuit->indices.size(); ++k) {
    if (circuit->coefficients[k].sign() < 0) flip |= std::uint64_t{1} << circuit->indices[k];
  }
  const std::uint64_t full = (std::uint64_t{1} << gs.size()) - 1;
  std::vector<std::size_t> map;
  for (const std::uint64_t mask : zv.sign_masks) {
    const std::uint64_t cube = mask ^ flip;
    if (cube == 0 || cube == full) throw PreconditionError("sign vector maps onto a removed cube vertex");
    map.push_back(static_cast<std::size_t>(cube - 1));
  }
  return map;
}

/// Summary of a decomposition's graph in the same shape as summarize_components.
inline ComponentSummary summarize(const Decomposition& dec) {
  return {dec.cycle_lengths(), dec.independent_block.size()};
}

}  // namespace halfint::zono
