#include <gtest/gtest.h>

#include <random>

#include "halfint/halfint.hpp"

using namespace halfint;
using namespace halfint::flow;

namespace {

Routing k2_routing() {
  return {Graph::with_index_labels(2, {{0, 1}}), {{0, 1, {{{0, 1}, 1}}}, {1, 0, {{{1, 0}, 1}}}}};
}

// Net flow of every demand is one unit out of s and into t, zero elsewhere;
// summing over a cut, the flow crossing out of S is at least |S| |V \ S|.
Rational flow_out_of(const Routing& r, const std::vector<char>& in_s) {
  Rational out;
  const auto flows = arc_flows(r);
  for (std::size_t a = 0; a < flows.size(); ++a) {
    const auto [u, v] = r.graph.arc(a);
    if (in_s[u] && !in_s[v]) out += flows[a];
  }
  return out;
}

}  // namespace

TEST(Congestion, Examples) {
  const auto k2 = congestion(k2_routing());
  EXPECT_EQ(k2.max_arc_flow, Rational(1));
  EXPECT_EQ(k2.congestion, Rational(1, 2));

  const auto q3 = congestion(bitfix_routing(3));
  EXPECT_EQ(q3.max_arc_flow, Rational(4));
  EXPECT_EQ(q3.congestion, Rational(1, 2));

  const auto hex = congestion(hexagon_routing());
  EXPECT_EQ(hex.max_arc_flow, Rational(9, 2));
  EXPECT_EQ(hex.congestion, Rational(3, 4));
}

TEST(Validate, Violations) {
  EXPECT_TRUE(validate(bitfix_routing(2)).valid);
  EXPECT_TRUE(validate(hexagon_routing()).valid);

  Routing missing = bitfix_routing(2);
  missing.demands.pop_back();
  auto v = validate(missing);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.message, "missing demand");

  Routing half = bitfix_routing(2);
  half.demands[3].paths[0].weight = Rational(1, 2);
  v = validate(half);
  EXPECT_EQ(v.message, "non-unit demand");
  ASSERT_TRUE(v.pair);
  EXPECT_EQ(*v.pair, (std::pair<std::size_t, std::size_t>{half.demands[3].source, half.demands[3].target}));

  Routing dup = bitfix_routing(2);
  dup.demands.push_back(dup.demands.front());
  EXPECT_EQ(validate(dup).message, "duplicate demand");

  Routing jump = k2_routing();
  jump.graph = Graph::with_index_labels(2, {});
  v = validate(jump);
  EXPECT_EQ(v.message, "path uses a missing arc");
  EXPECT_EQ(v.path_index, 0u);

  Routing ends = k2_routing();
  ends.demands[0].paths[0].vertices = {1, 0};
  EXPECT_EQ(validate(ends).message, "path does not join the demand endpoints");

  EXPECT_THROW(congestion(missing), UsageError);
}

TEST(Bitfix, EveryArcCarriesHalfTheVertexCount) {
  for (std::size_t d = 1; d <= 6; ++d) {
    const Routing r = bitfix_routing(d);
    EXPECT_TRUE(validate(r).valid);
    const Rational expected(static_cast<long>(std::size_t{1} << (d - 1)));
    for (const auto& f : arc_flows(r)) EXPECT_EQ(f, expected) << d;
    const auto rep = congestion(r);
    EXPECT_EQ(rep.congestion, Rational(1, 2));
    EXPECT_EQ(expansion_lower_bound(rep), Rational(1));
  }
  EXPECT_THROW(bitfix_routing(0), UsageError);
  EXPECT_THROW(bitfix_routing(11), UsageError);
}

TEST(Bitfix, FlipsCoordinatesInIncreasingOrder) {
  EXPECT_EQ(flow::detail::bitfix_masks(0b000, 0b101, 3), (std::vector<std::uint64_t>{0b000, 0b001, 0b101}));
  EXPECT_EQ(flow::detail::bitfix_masks(0b110, 0b011, 3), (std::vector<std::uint64_t>{0b110, 0b111, 0b011}));
}

TEST(Punctured, CongestionBounds) {
  for (std::size_t d = 4; d <= 6; ++d) {
    const auto pr = punctured_routing(d);
    EXPECT_TRUE(validate(pr.routing).valid);
    EXPECT_TRUE(pr.within_hypothesis);
    EXPECT_TRUE(pr.detour_sets_disjoint);
    const auto rep = congestion(pr.routing);
    EXPECT_LE(rep.max_arc_flow, Rational(3 * (1L << (d - 2))));
    EXPECT_LE(rep.congestion, Rational(3) / (Rational(4) - Rational(8) / Rational(1L << d)));
    EXPECT_LE(rep.congestion, Rational(6, 7));
    EXPECT_GE(expansion_lower_bound(rep), Rational(7, 12));
  }
  EXPECT_EQ(congestion(punctured_routing(4).routing).congestion, Rational(11, 14));
}

TEST(Punctured, DimensionThreeOverlap) {
  const auto pr = punctured_routing(3);
  EXPECT_FALSE(pr.within_hypothesis);
  EXPECT_FALSE(pr.detour_sets_disjoint);
  EXPECT_TRUE(validate(pr.routing).valid);
  const auto rep = congestion(pr.routing);
  EXPECT_EQ(rep.max_arc_flow, Rational(5));
  EXPECT_EQ(rep.congestion, Rational(5, 6));
  EXPECT_THROW(punctured_routing(2), UsageError);
}

TEST(Product, CongestionStaysWithinTheFactors) {
  const auto q2 = product_routing(bitfix_routing(1), bitfix_routing(1));
  EXPECT_EQ(congestion(q2).congestion, Rational(1, 2));

  const auto mixed = product_routing(bitfix_routing(2), hexagon_routing());
  EXPECT_TRUE(validate(mixed).valid);
  EXPECT_LE(congestion(mixed).congestion, Rational(3, 4));

  const auto q6 = product_routing(bitfix_routing(3), bitfix_routing(3));
  EXPECT_LE(congestion(q6).congestion, Rational(1, 2));
}

TEST(Product, CrossPairsGoThroughTheTargetsFirstCoordinate) {
  const auto r = product_routing(bitfix_routing(1), hexagon_routing());
  // (0, 0) -> (1, 1): first to (1, 0), then to (1, 1).
  for (const auto& d : r.demands) {
    if (d.source == 0 && d.target == 7) {
      ASSERT_EQ(d.paths.size(), 1u);
      EXPECT_EQ(d.paths[0].vertices, (std::vector<std::size_t>{0, 6, 7}));
    }
  }
}

TEST(LowerBound, IsSoundAgainstBruteForce) {
  const std::vector<Routing> routings{bitfix_routing(2), bitfix_routing(3), hexagon_routing(),
                                      punctured_routing(4).routing,
                                      product_routing(bitfix_routing(1), hexagon_routing())};
  for (const auto& r : routings) {
    const Rational bound = expansion_lower_bound(congestion(r));
    EXPECT_LE(bound, expansion_bruteforce(r.graph).value);
  }
  CongestionReport zero;
  EXPECT_THROW(expansion_lower_bound(zero), UsageError);
}

TEST(LowerBound, FlowAcrossEveryCutCoversTheDemands) {
  std::mt19937 rng(31);
  const std::vector<Routing> routings{bitfix_routing(4), hexagon_routing(), punctured_routing(4).routing};
  for (const auto& r : routings) {
    const std::size_t n = r.graph.vertex_count();
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<char> in_s(n, 0);
      std::size_t size = 0;
      for (auto& x : in_s) {
        x = std::bernoulli_distribution(0.5)(rng) ? 1 : 0;
        size += x;
      }
      if (size == 0 || size == n) continue;
      EXPECT_GE(flow_out_of(r, in_s), Rational(static_cast<long>(size * (n - size))));
    }
  }
}
