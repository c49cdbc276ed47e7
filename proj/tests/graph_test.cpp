#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "slg/graph.hpp"

namespace {

slg::Graph diamond() {
  // V = {1..4}, E = {12, 23, 34, 41, 13}, shifted to 0-based.
  return slg::Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

bool is_chain_degree_sequence(const std::vector<std::size_t>& d) {
  if (d.size() == 1) return d[0] == 0;
  if (d.size() == 2) return d[0] == 1 && d[1] == 1;
  return d[0] == 1 && d[1] == 1 &&
         std::all_of(d.begin() + 2, d.end(), [](auto x) { return x == 2; });
}

TEST(Path, SingleVertexHasNoEdges) {
  auto g = slg::path(1);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Path, FiveVerticesFormAChain) {
  auto g = slg::path(5);
  ASSERT_EQ(g.vertex_count(), 5u);
  ASSERT_EQ(g.edge_count(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(g.edge(i), (slg::Edge{i, i + 1}));
}

TEST(Path, TwoVerticesIsOneEdge) {
  auto g = slg::path(2);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edge(0), (slg::Edge{0, 1}));
}

TEST(Path, ZeroVerticesRejected) { EXPECT_THROW(slg::path(0), slg::invalid_argument_error); }

TEST(GraphConstruction, RejectsSelfLoop) {
  EXPECT_THROW(slg::Graph(3, {{0, 1}, {2, 2}}), slg::invalid_argument_error);
}

TEST(GraphConstruction, RejectsDuplicateInEitherOrientation) {
  EXPECT_THROW(slg::Graph(3, {{0, 1}, {0, 1}}), slg::invalid_argument_error);
  EXPECT_THROW(slg::Graph(3, {{0, 1}, {1, 0}}), slg::invalid_argument_error);
}

TEST(GraphConstruction, RejectsOutOfRangeEndpoint) {
  EXPECT_THROW(slg::Graph(3, {{0, 3}}), slg::invalid_argument_error);
}

TEST(GraphConstruction, NormalizesOrientation) {
  slg::Graph g(3, {{2, 0}});
  EXPECT_EQ(g.edge(0), (slg::Edge{0, 2}));
}

TEST(GraphConstruction, EdgeCapIsEnforced) {
  EXPECT_THROW(slg::path(10, 5), slg::capacity_error);
  EXPECT_NO_THROW(slg::path(6, 5));
  // 50 x 50 grid has 4900 edges, above the default cap.
  EXPECT_THROW(slg::grid({50, 50}), slg::capacity_error);
  EXPECT_NO_THROW(slg::grid({45, 45}));
}

TEST(CartesianProduct, TrivialFactors) {
  auto g = slg::cartesian_product(slg::path(1), slg::path(1));
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(CartesianProduct, FourBySixEdgeCount) {
  auto g = slg::cartesian_product(slg::path(4), slg::path(6));
  EXPECT_EQ(g.vertex_count(), 24u);
  // Direct count: 4 copies of P6 (5 edges each) + 3 edges of P4 times 6.
  EXPECT_EQ(g.edge_count(), 4u * 5u + 3u * 6u);
  EXPECT_EQ(g.edge_count(), 2u * 4u * 6u - 4u - 6u);
}

TEST(CartesianProduct, TwoByTwoIsFourCycle) {
  auto g = slg::cartesian_product(slg::path(2), slg::path(2));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.degree_sequence(), (std::vector<std::size_t>{2, 2, 2, 2}));
}

TEST(CartesianProduct, VertexNumberingAndEdgeBlocks) {
  // g = P3 (a), h = P2 (b): vertex (a, b) = 2a + b.
  auto g = slg::cartesian_product(slg::path(3), slg::path(2));
  std::vector<slg::Edge> expected{
      {0, 1}, {2, 3}, {4, 5},        // h copies, by a
      {0, 2}, {1, 3}, {2, 4}, {3, 5} // g copies, by g edge then b
  };
  EXPECT_TRUE(std::ranges::equal(g.edges(), expected));
}

TEST(Grid, OneByOne) {
  auto g = slg::grid({1, 1});
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Grid, SixByFour) {
  auto g = slg::grid({6, 4});
  EXPECT_EQ(g.vertex_count(), 24u);
  EXPECT_EQ(g.edge_count(), 38u);
}

TEST(Grid, SevenByFive) {
  auto g = slg::grid({7, 5});
  EXPECT_EQ(g.vertex_count(), 35u);
  EXPECT_EQ(g.edge_count(), 58u);
}

TEST(Grid, RejectsZeroDimension) {
  EXPECT_THROW(slg::grid({0, 3}), slg::invalid_argument_error);
  EXPECT_THROW(slg::grid({3, 0}), slg::invalid_argument_error);
}

TEST(Grid, NumberingIsRowMajorHorizontalFirst) {
  const slg::GridSpec spec{4, 3};
  auto g = slg::grid(spec);
  for (std::size_t i = 0; i < spec.rows; ++i)
    for (std::size_t j = 0; j + 1 < spec.cols; ++j)
      EXPECT_EQ(g.edge(spec.horizontal_edge(i, j)),
                (slg::Edge{spec.vertex_id(i, j), spec.vertex_id(i, j + 1)}));
  for (std::size_t i = 0; i + 1 < spec.rows; ++i)
    for (std::size_t j = 0; j < spec.cols; ++j)
      EXPECT_EQ(g.edge(spec.vertical_edge(i, j)),
                (slg::Edge{spec.vertex_id(i, j), spec.vertex_id(i + 1, j)}));
  // Spot values: first vertical edge comes right after the 9 horizontal ones.
  EXPECT_EQ(spec.vertical_edge(0, 0), 9u);
  EXPECT_EQ(g.edge(9), (slg::Edge{0, 4}));
}

TEST(Grid, EqualsProductOfPaths) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 1; m <= 6; ++m)
      EXPECT_EQ(slg::grid({n, m}), slg::cartesian_product(slg::path(m), slg::path(n)));
}

TEST(GridProperty, CountsForAllSmallDimensions) {
  for (std::size_t n = 1; n <= 15; ++n)
    for (std::size_t m = 1; m <= 15; ++m) {
      auto g = slg::grid({n, m});
      EXPECT_EQ(g.vertex_count(), n * m);
      EXPECT_EQ(g.edge_count(), 2 * m * n - m - n);
    }
}

TEST(GridProperty, TransposeHasSameDegreeSequence) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t m = 1; m <= 10; ++m) {
      auto a = slg::grid({n, m});
      auto b = slg::grid({m, n});
      EXPECT_EQ(a.vertex_count(), b.vertex_count());
      EXPECT_EQ(a.edge_count(), b.edge_count());
      EXPECT_EQ(a.degree_sequence(), b.degree_sequence());
    }
}

TEST(EdgesAdjacent, PathExamples) {
  auto g = slg::path(5);
  EXPECT_TRUE(slg::edges_adjacent(g, 0, 1));
  EXPECT_FALSE(slg::edges_adjacent(g, 0, 2));
  for (std::size_t i = 0; i < g.edge_count(); ++i) EXPECT_FALSE(slg::edges_adjacent(g, i, i));
}

TEST(EdgesAdjacent, OutOfRange) {
  auto g = slg::path(5);
  EXPECT_THROW(slg::edges_adjacent(g, 0, 4), slg::invalid_argument_error);
  EXPECT_THROW(g.adjacency(7), slg::invalid_argument_error);
}

TEST(AdjacencyMasks, AgreeWithPairwiseCheck) {
  std::vector<slg::Graph> graphs{slg::grid({4, 4}), slg::grid({5, 4}), slg::grid({5, 5}),
                                 slg::grid({8, 3}), diamond(), slg::path(40)};
  std::mt19937 rng(7);
  for (int k = 0; k < 30; ++k) graphs.push_back(oracle::random_graph(rng, 12, 40));
  for (const auto& g : graphs) {
    ASSERT_LE(g.edge_count(), 40u);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      EXPECT_FALSE(g.adjacency(i).contains(i));
      for (std::size_t j = 0; j < g.edge_count(); ++j) {
        EXPECT_EQ(g.adjacency(i).contains(j), oracle::share_endpoint(g, i, j));
        EXPECT_EQ(g.adjacency(i).contains(j), g.adjacency(j).contains(i));
        EXPECT_EQ(slg::edges_adjacent(g, i, j), oracle::share_endpoint(g, i, j));
      }
    }
  }
}

TEST(LineGraph, SingleEdge) {
  auto l = slg::line_graph(slg::path(2));
  EXPECT_EQ(l.vertex_count(), 1u);
  EXPECT_EQ(l.edge_count(), 0u);
}

TEST(LineGraph, Diamond) {
  auto l = slg::line_graph(diamond());
  EXPECT_EQ(l.vertex_count(), 5u);
  EXPECT_EQ(l.edge_count(), 8u);
}

TEST(LineGraph, PathOfFiveMatchesEnumeration) {
  auto g = slg::path(5);
  auto l = slg::line_graph(g);
  EXPECT_EQ(l.vertex_count(), 4u);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : l.edges()) edges.insert({e.u, e.v});
  EXPECT_EQ(edges, oracle::line_graph_edges(g));
  EXPECT_EQ(l.edge_count(), 3u);
}

TEST(LineGraphProperty, PathLineGraphIsShorterPath) {
  for (std::size_t k = 2; k <= 30; ++k) {
    auto l = slg::line_graph(slg::path(k));
    EXPECT_EQ(l.vertex_count(), k - 1);
    EXPECT_EQ(l.edge_count(), k - 2);
    EXPECT_TRUE(is_chain_degree_sequence(l.degree_sequence())) << "k = " << k;
  }
}

TEST(LineGraphProperty, EdgesMatchBruteForce) {
  std::mt19937 rng(11);
  for (int k = 0; k < 40; ++k) {
    auto g = oracle::random_graph(rng, 10, 25);
    auto l = slg::line_graph(g);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : l.edges()) edges.insert({e.u, e.v});
    EXPECT_EQ(edges, oracle::line_graph_edges(g));
  }
}

TEST(Graph, CopiesShareImmutableState) {
  auto g = slg::grid({3, 3});
  auto copy = g;
  EXPECT_EQ(copy, g);
  EXPECT_EQ(&copy.adjacency(0), &g.adjacency(0));
}

TEST(Graph, FindEdge) {
  auto g = slg::grid({3, 2});
  EXPECT_EQ(g.find_edge(1, 0), std::optional<std::size_t>{0});
  EXPECT_EQ(g.find_edge(0, 4), std::nullopt);
}

} // namespace
