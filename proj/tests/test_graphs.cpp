#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "halfint/halfint.hpp"
#include "oracles.hpp"

using namespace halfint;

namespace {

Graph k2() { return Graph::with_index_labels(2, {{0, 1}}); }

std::vector<std::size_t> mask_to_subset(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if ((mask >> v) & 1) out.push_back(v);
  }
  return out;
}

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::with_index_labels(n, edges);
}

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndBadEndpoints) {
  EXPECT_THROW(Graph::with_index_labels(2, {{0, 0}}), UsageError);
  EXPECT_THROW(Graph::with_index_labels(2, {{0, 1}, {1, 0}}), UsageError);
  EXPECT_THROW(Graph::with_index_labels(2, {{0, 2}}), UsageError);
}

TEST(Graph, ArcIdsCoverEveryDirectedArcOnce) {
  const Graph g = hypercube(3);
  std::vector<int> seen(g.arc_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    ++seen[g.arc_id(u, v)];
    ++seen[g.arc_id(v, u)];
    EXPECT_EQ(g.arc(g.arc_id(u, v)), Edge(u, v));
  }
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  EXPECT_THROW(g.arc_id(0, 7), UsageError);
}

TEST(CutRatio, Examples) {
  const std::vector<std::size_t> one{0};
  EXPECT_EQ(cut_ratio(cycle_graph(4), one).ratio, Rational(2));
  const std::vector<std::size_t> three{0, 1, 2};
  EXPECT_EQ(cut_ratio(cycle_graph(6), three).ratio, Rational(2, 3));
  const Graph q3 = hypercube(3);
  std::vector<std::size_t> first_zero;
  for (std::size_t m = 0; m < 8; ++m) {
    if (!(m & 1)) first_zero.push_back(m);
  }
  const auto r = cut_ratio(q3, first_zero);
  EXPECT_EQ(r.boundary_size, 4u);
  EXPECT_EQ(r.ratio, Rational(1));
}

TEST(CutRatio, DegenerateCutsAreRejected) {
  const Graph g = cycle_graph(4);
  EXPECT_THROW(cut_ratio(g, std::vector<std::size_t>{}), UsageError);
  EXPECT_THROW(cut_ratio(g, std::vector<std::size_t>{0, 1, 2, 3}), UsageError);
  EXPECT_THROW(cut_ratio(g, std::vector<std::size_t>{9}), UsageError);
}

TEST(CutRatio, ComplementGivesTheSameRatio) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 9, 0.4);
    const std::uint64_t mask = std::uniform_int_distribution<std::uint64_t>(1, 510)(rng);
    const auto a = cut_ratio(g, mask_to_subset(mask, 9));
    const auto b = cut_ratio(g, mask_to_subset(~mask & 511, 9));
    EXPECT_EQ(a.ratio, b.ratio);
    EXPECT_EQ(a.boundary_size, b.boundary_size);
  }
}

TEST(Expansion, SmallFamilies) {
  EXPECT_EQ(expansion_bruteforce(cycle_graph(4)).value, Rational(1));
  const auto c6 = expansion_bruteforce(cycle_graph(6));
  EXPECT_EQ(c6.value, Rational(2, 3));
  EXPECT_EQ(c6.witness.subset, (std::vector<std::size_t>{0, 1, 2}));
  for (std::size_t d = 1; d <= 4; ++d) EXPECT_EQ(expansion_bruteforce(hypercube(d)).value, Rational(1)) << d;
}

TEST(Expansion, Guards) {
  EXPECT_THROW(expansion_bruteforce(Graph::with_index_labels(1, {})), UsageError);
  EXPECT_THROW(expansion_bruteforce(cycle_graph(27)), UsageError);
  EXPECT_THROW(expansion_bruteforce(cycle_graph(12), {10, 1}), UsageError);
}

TEST(Expansion, MatchesNaiveOracleAndLowerBoundsEveryCut) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const Graph g = random_graph(rng, n, 0.35);
    const auto res = expansion_bruteforce(g, {26, 2});
    const auto ref = oracle::expansion(g);
    EXPECT_EQ(res.value, ref.value.rational());
    EXPECT_EQ(res.witness.subset, mask_to_subset(ref.mask, n));
    EXPECT_EQ(cut_ratio(g, res.witness.subset).ratio, res.value);
    for (int s = 0; s < 20; ++s) {
      const std::uint64_t mask =
          std::uniform_int_distribution<std::uint64_t>(1, (std::uint64_t{1} << n) - 2)(rng);
      EXPECT_LE(res.value, cut_ratio(g, mask_to_subset(mask, n)).ratio);
    }
  }
}

TEST(Expansion, ThreadCountDoesNotChangeTheAnswer) {
  std::mt19937 rng(23);
  const Graph g = random_graph(rng, 16, 0.3);
  const auto one = expansion_bruteforce(g, {26, 1});
  const auto four = expansion_bruteforce(g, {26, 4});
  EXPECT_EQ(one.value, four.value);
  EXPECT_EQ(one.witness.subset, four.witness.subset);
}

TEST(Product, Examples) {
  const Graph sq = cartesian_product(k2(), k2());
  EXPECT_EQ(sq.vertex_count(), 4u);
  EXPECT_EQ(sq.edge_count(), 4u);
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(sq.degree(v), 2u);

  const Graph q3 = cartesian_product(hypercube(2), k2());
  EXPECT_EQ(q3.vertex_count(), 8u);
  EXPECT_EQ(q3.edge_count(), 12u);
  EXPECT_EQ(expansion_bruteforce(q3).value, Rational(1));

  const Graph prism = cartesian_product(cycle_graph(6), k2());
  EXPECT_EQ(prism.vertex_count(), 12u);
  EXPECT_EQ(prism.edge_count(), 18u);
  EXPECT_EQ(prism.label(1), "0|1");
}

TEST(Isomorphism, ExplicitMaps) {
  const Graph c4 = cycle_graph(4);
  std::vector<std::size_t> id(4);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_TRUE(is_isomorphic_via(c4, c4, id));
  EXPECT_FALSE(is_isomorphic_via(c4, path_graph(3), id));
  EXPECT_TRUE(is_isomorphic_via(c4, hypercube(2), std::vector<std::size_t>{0, 1, 3, 2}));
  EXPECT_THROW(is_isomorphic_via(c4, c4, std::vector<std::size_t>{0, 0, 1, 2}), UsageError);
  EXPECT_THROW(is_isomorphic_via(c4, c4, std::vector<std::size_t>{0, 1}), UsageError);
}

TEST(Families, Shapes) {
  EXPECT_EQ(hypercube(4).edge_count(), 32u);
  EXPECT_EQ(hypercube(3).label(6), "011");
  const Graph pq = punctured_hypercube(4);
  EXPECT_EQ(pq.vertex_count(), 14u);
  EXPECT_EQ(pq.edge_count(), 32u - 8u);
  EXPECT_EQ(disjoint_union(cycle_graph(3), path_graph(2)).label(3), "1:0");
  EXPECT_NE(to_dot(cycle_graph(3)).find("\"0\" -- \"1\""), std::string::npos);
}
