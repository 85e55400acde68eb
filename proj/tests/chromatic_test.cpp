#include <gtest/gtest.h>

#include <random>

#include "isf/chromatic.hpp"
#include "isf/error.hpp"
#include "isf/forest_enumeration.hpp"
#include "test_util.hpp"

namespace isf {
namespace {

using test::edges;
using test::forest;
using test::graph;
using Conv = BrokenCircuitConvention;

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

TEST(LexEdgeOrderTest, Examples) {
  EXPECT_EQ(lex_edge_order(graph(4, {{2, 3}, {1, 4}, {3, 4}, {2, 4}})), edges({{1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(lex_edge_order(graph(2, {{1, 2}})), edges({{1, 2}}));
  EXPECT_EQ(lex_edge_order(OrderedGraph::complete(3)), edges({{1, 2}, {1, 3}, {2, 3}}));
}

TEST(BrokenCircuitsTest, Examples) {
  const OrderedGraph g = test::triangle_with_pendant();
  EXPECT_EQ(broken_circuits(g, Conv::remove_min), std::vector<EdgeList>{edges({{2, 4}, {3, 4}})});
  EXPECT_EQ(broken_circuits(g, Conv::remove_max), std::vector<EdgeList>{edges({{2, 3}, {2, 4}})});
  EXPECT_TRUE(broken_circuits(graph(4, {{1, 2}, {2, 3}, {2, 4}}), Conv::remove_min).empty());
}

TEST(CircuitsTest, MatchesSubsetSearch) {
  for (int n = 1; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
      const OrderedGraph g = OrderedGraph::from_edge_mask(n, mask);
      std::vector<EdgeList> expected;
      for (const auto& c : oracle::circuits_by_subsets(n, test::pairs(g.edges()))) expected.push_back(test::from_pairs(c));
      ASSERT_EQ(circuits(g), expected) << "n=" << n << " mask=" << mask;
    }
  }
  EXPECT_EQ(circuits(OrderedGraph::complete(4)).size(), 7u);
  EXPECT_EQ(circuits(OrderedGraph::complete(5)).size(), 37u);
}

TEST(AdmissibilityTest, Examples) {
  const OrderedGraph g = test::triangle_with_pendant();
  EXPECT_TRUE(is_admissible_goodvertex(g, forest(4, {{1, 4}, {2, 4}, {3, 4}})));
  EXPECT_TRUE(is_admissible_goodvertex(g, forest(4, {{2, 3}, {3, 4}})));
  EXPECT_FALSE(is_admissible_goodvertex(g, forest(4, {{2, 4}, {3, 4}})));
  EXPECT_TRUE(is_admissible_goodvertex(g, Forest(4, {})));
  try {
    is_admissible_goodvertex(g, forest(4, {{1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_in_graph);
  }
}

TEST(NbcTest, Examples) {
  const OrderedGraph g = test::triangle_with_pendant();
  const Forest a = forest(4, {{1, 4}, {2, 4}, {3, 4}});
  EXPECT_TRUE(is_nbc(g, a, Conv::remove_max));
  EXPECT_FALSE(is_nbc(g, a, Conv::remove_min));
  EXPECT_TRUE(is_nbc(g, Forest(4, {}), Conv::remove_min));
  EXPECT_TRUE(is_nbc(g, forest(4, {{2, 4}, {3, 4}}), Conv::remove_max));
  EXPECT_THROW(is_nbc(g, forest(4, {{1, 3}}), Conv::remove_min), Error);
}

TEST(ChromaticPolynomialTest, Examples) {
  EXPECT_EQ(to_string(chromatic_polynomial(OrderedGraph::complete(3))), "t^3 - 3t^2 + 2t");
  EXPECT_EQ(chromatic_polynomial(OrderedGraph::complete(3)).coeffs(), big({0, 2, -3, 1}));
  EXPECT_EQ(to_string(chromatic_polynomial(test::triangle_with_pendant())), "t^4 - 4t^3 + 5t^2 - 2t");
  EXPECT_EQ(chromatic_polynomial(OrderedGraph::edgeless(2)), IntPoly::monomial(2));
  EXPECT_EQ(chromatic_polynomial(OrderedGraph::edgeless(0)), IntPoly::monomial(0));
}

TEST(IntPolyTest, Arithmetic) {
  const IntPoly t = IntPoly::monomial(1);
  const IntPoly one = IntPoly::monomial(0);
  EXPECT_EQ((t - one) * (t + one), IntPoly(big({-1, 0, 1})));
  EXPECT_EQ(IntPoly(big({0, 2, -3, 1})).negate_variable(), IntPoly(big({0, -2, -3, -1})));
  EXPECT_TRUE((t - t).is_zero());
  EXPECT_EQ(to_string(IntPoly{}), "0");
  EXPECT_EQ(IntPoly(big({1, 0, 0})).degree(), 0);
}

TEST(ChromaticPolynomialTest, CountsColouringsOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
      const OrderedGraph g = OrderedGraph::from_edge_mask(n, mask);
      const IntPoly p = chromatic_polynomial(g, PivotRule::first_edge);
      ASSERT_EQ(p, chromatic_polynomial(g, PivotRule::last_edge));
      for (int t = 0; t <= n + 1; ++t) {
        BigInt value = 0, power = 1;
        for (const BigInt& c : p.coeffs()) {
          value += c * power;
          power *= t;
        }
        ASSERT_EQ(value, BigInt(std::to_string(oracle::proper_colourings(n, test::pairs(g.edges()), t))))
            << "n=" << n << " mask=" << mask << " t=" << t;
      }
    }
  }
}

TEST(WhitneyTest, Examples) {
  WhitneyCheck w = whitney_check(test::triangle_with_pendant(), Conv::remove_min);
  EXPECT_EQ(w.counts, big({0, 2, 5, 4, 1}));
  EXPECT_EQ(w.coeffs, w.counts);
  EXPECT_TRUE(w.equal);
  w = whitney_check(OrderedGraph::complete(3), Conv::remove_max);
  EXPECT_EQ(w.counts, big({0, 2, 3, 1}));
  EXPECT_TRUE(w.equal);
  w = whitney_check(OrderedGraph::edgeless(3), Conv::remove_min);
  EXPECT_EQ(w.counts, big({0, 0, 0, 1}));
  EXPECT_TRUE(w.equal);
}

TEST(WhitneyTest, BothConventionsOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
      const OrderedGraph g = OrderedGraph::from_edge_mask(n, mask);
      ASSERT_TRUE(whitney_check(g, Conv::remove_min).equal) << "n=" << n << " mask=" << mask;
      ASSERT_TRUE(whitney_check(g, Conv::remove_max).equal) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(WhitneyTest, NbcFamiliesAreDownwardClosed) {
  for (int n = 1; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
      const OrderedGraph g = OrderedGraph::from_edge_mask(n, mask);
      for (const Forest& f : spanning_forests(g))
        for (Conv c : {Conv::remove_min, Conv::remove_max}) {
          if (!is_nbc(g, f, c)) continue;
          for (const Edge& e : f.edges()) ASSERT_TRUE(is_nbc(g, f.without(e), c));
        }
    }
  }
}

// The good-vertex family is counted against the Whitney coefficients. The
// tally is compared wholesale, graph by graph.
TEST(WhitneyTest, GoodVertexCountsMatchCoefficients) {
  int graphs = 0, matches = 0;
  for (int n = 1; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
      const WhitneyCheck w = whitney_check(OrderedGraph::from_edge_mask(n, mask), Conv::remove_min);
      ++graphs;
      if (w.goodvertex_counts == w.coeffs) ++matches;
    }
  }
  EXPECT_EQ(matches, graphs);
}

TEST(AdmissibilityTableTest, ConventionsDisagreeOnForests) {
  const auto table = admissibility_table(test::triangle_with_pendant());
  int min_only = 0, max_only = 0, good_vs_min = 0, good_vs_max = 0;
  for (const AdmissibilityRow& r : table) {
    min_only += r.nbc_min && !r.nbc_max;
    max_only += r.nbc_max && !r.nbc_min;
    good_vs_min += r.good_vertex != r.nbc_min;
    good_vs_max += r.good_vertex != r.nbc_max;
  }
  // The good-vertex family agrees with neither convention forest by forest.
  EXPECT_EQ(good_vs_min, 2);
  EXPECT_EQ(good_vs_max, 4);
  EXPECT_EQ(table.size(), spanning_forests(test::triangle_with_pendant()).size());
  EXPECT_GT(min_only, 0);
  EXPECT_GT(max_only, 0);
}

TEST(SpanningForestsTest, TreesOfCompleteGraphs) {
  for (int n = 1; n <= 5; ++n) {
    int trees = 0;
    for (const Forest& f : spanning_forests(OrderedGraph::complete(n))) trees += f.component_count() == 1;
    EXPECT_EQ(trees, static_cast<int>(oracle::labelled_trees(n).size()));
  }
}

TEST(RelabelTest, Examples) {
  EXPECT_EQ(relabel(test::triangle_with_pendant(), {1, 3, 4, 2}), graph(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_THROW(relabel(test::triangle_with_pendant(), {1, 1, 2, 3}), Error);
  EXPECT_THROW(relabel(test::triangle_with_pendant(), {1, 2, 3}), Error);
}

TEST(MovableEdgeSearchTest, WorkedCounterexample) {
  const MovableSearch s = movable_edge_search(test::triangle_with_pendant());
  EXPECT_FALSE(s.all_pairs_ok);
  const std::pair<Forest, Forest> witness{forest(4, {{1, 4}, {2, 4}, {3, 4}}), forest(4, {{2, 3}, {3, 4}})};
  EXPECT_NE(std::find(s.failures.begin(), s.failures.end(), witness), s.failures.end());

  const MovableSearch r = movable_edge_search(test::triangle_with_pendant(), std::vector<int>{1, 3, 4, 2});
  EXPECT_EQ(r.graph, graph(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_TRUE(r.all_pairs_ok);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_GT(r.pairs_checked, 0u);
}

TEST(MovableEdgeSearchTest, JobCountDoesNotChangeResult) {
  const OrderedGraph g = test::triangle_with_pendant();
  const MovableSearch a = movable_edge_search(g, std::nullopt, 1);
  const MovableSearch b = movable_edge_search(g, std::nullopt, 3);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.pairs_checked, b.pairs_checked);
}

TEST(MovableEdgeSearchTest, TreeGraphs) {
  EXPECT_TRUE(movable_edge_search(graph(4, {{1, 2}, {2, 3}, {3, 4}})).all_pairs_ok);
  EXPECT_TRUE(movable_edge_search(graph(5, {{1, 2}, {1, 3}, {3, 4}, {3, 5}})).all_pairs_ok);
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : oracle::labelled_trees(n))
      EXPECT_TRUE(movable_edge_search(OrderedGraph(n, test::from_pairs(t))).all_pairs_ok);
}

TEST(PeoTest, Examples) {
  PeoCheck c = peo_isf_check(OrderedGraph::complete(3));
  EXPECT_TRUE(c.holds);
  EXPECT_TRUE(c.peo_condition);
  EXPECT_EQ(to_string(c.lhs), "t^3 + 3t^2 + 2t");
  EXPECT_EQ(c.rhs, c.lhs);

  c = peo_isf_check(graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  EXPECT_FALSE(c.holds);
  EXPECT_FALSE(c.peo_condition);

  c = peo_isf_check(OrderedGraph::edgeless(3));
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.lhs, IntPoly::monomial(3));
}

TEST(PeoTest, IdentityHoldsExactlyUnderPeo) {
  for (int n = 1; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
      const PeoCheck c = peo_isf_check(OrderedGraph::from_edge_mask(n, mask));
      ASSERT_EQ(c.holds, c.peo_condition) << "n=" << n << " mask=" << mask;
    }
  }
}

}  // namespace
}  // namespace isf
