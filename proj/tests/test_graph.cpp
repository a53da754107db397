#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "topomap/graph.hpp"

using namespace topomap;

TEST_CASE("from_edges canonicalizes order and direction") {
  const Graph g = Graph::from_edges(4, {{3, 1}, {0, 1}, {2, 1}});
  REQUIRE(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
  REQUIRE(g.has_edge(1, 0));
  REQUIRE(g.has_edge(3, 1));
  REQUIRE_FALSE(g.has_edge(0, 2));
}

TEST_CASE("from_edges rejects malformed input") {
  REQUIRE_THROWS_AS(Graph::from_edges(0, {}), PreconditionError);
  REQUIRE_THROWS_AS(Graph::from_edges(3, {{1, 1}}), PreconditionError);
  REQUIRE_THROWS_AS(Graph::from_edges(3, {{0, 3}}), PreconditionError);
  REQUIRE_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("single node graph is valid and connected") {
  const Graph g = Graph::from_edges(1, {});
  REQUIRE(g.edge_count() == 0);
  REQUIRE(is_connected(g));
}

TEST_CASE("degree sequence") {
  REQUIRE(degree_sequence(Graph::from_edges(4, {})) == std::vector<int>{0, 0, 0, 0});
  REQUIRE(degree_sequence(testutil::diamond_graph()) == std::vector<int>{2, 3, 2, 3});
  REQUIRE(degree_sequence(complete_graph(4)) == std::vector<int>{3, 3, 3, 3});
}

TEST_CASE("degree sum equals twice the edge count on random graphs") {
  Xoshiro256 rng(99);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = testutil::random_simple_graph(1 + static_cast<int>(rng.below(12)), rng);
    int sum = 0;
    for (int d : degree_sequence(g)) sum += d;
    REQUIRE(sum == 2 * g.edge_count());
  }
}

TEST_CASE("permute by the identity is a no-op") {
  const Graph g = testutil::diamond_graph();
  const Graph h = permute(g, {0, 1, 2, 3});
  REQUIRE(h.edges == g.edges);
}

TEST_CASE("permute relabels the diamond onto its twin") {
  // Swapping nodes 2 and 3 maps one labeling onto the other.
  const Graph h = permute(testutil::diamond_graph(), {0, 1, 3, 2});
  REQUIRE(h.edges == testutil::diamond_graph_relabeled().edges);
}

TEST_CASE("applying an involution twice restores the graph") {
  const Graph g = testutil::diamond_graph();
  const std::vector<int> swap_ends{3, 2, 1, 0};  // (0 3)(1 2)
  const Graph once = permute(g, swap_ends);
  const Graph twice = permute(once, swap_ends);
  REQUIRE(twice.edges == g.edges);
}

TEST_CASE("permute validates the permutation") {
  const Graph g = testutil::diamond_graph();
  REQUIRE_THROWS_AS(permute(g, {0, 1, 2}), InvalidPermutation);
  REQUIRE_THROWS_AS(permute(g, {0, 1, 2, 2}), InvalidPermutation);
  REQUIRE_THROWS_AS(permute(g, {0, 1, 2, 4}), InvalidPermutation);
}

TEST_CASE("connectivity detection") {
  REQUIRE(is_connected(complete_graph(5)));
  REQUIRE_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  REQUIRE_FALSE(is_connected(Graph::from_edges(3, {})));
}
