#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "topomap/errors.hpp"

namespace topomap {

// Simple undirected graph on nodes 0..n-1. Edges are held canonically:
// first < second, sorted ascending, no duplicates, no self-loops. Build
// through from_edges so the invariants hold no matter where the edge list
// came from.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph from_edges(int node_count, std::vector<std::pair<int, int>> raw) {
    if (node_count < 1) throw PreconditionError("graph needs at least one node");
    for (auto& [a, b] : raw) {
      if (a == b) throw PreconditionError("self-loop at node " + std::to_string(a));
      if (a < 0 || b < 0 || a >= node_count || b >= node_count)
        throw PreconditionError("edge endpoint out of range");
      if (a > b) std::swap(a, b);
    }
    std::sort(raw.begin(), raw.end());
    if (std::adjacent_find(raw.begin(), raw.end()) != raw.end())
      throw PreconditionError("duplicate edge");
    return Graph{node_count, std::move(raw)};
  }

  bool has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
  }

  int edge_count() const { return static_cast<int>(edges.size()); }
};

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
  for (const auto& [a, b] : g.edges) {
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  return deg;
}

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
  for (const auto& [a, b] : g.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

// Relabels nodes: node i becomes perm[i]. perm must be a bijection on 0..n-1.
inline Graph permute(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n)
    throw InvalidPermutation("permutation length " + std::to_string(perm.size()) +
                             " does not match node count " + std::to_string(g.n));
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.n) throw InvalidPermutation("permutation entry out of range");
    if (seen[static_cast<std::size_t>(p)]) throw InvalidPermutation("permutation entry repeated");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges)
    mapped.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  return Graph::from_edges(g.n, std::move(mapped));
}

inline bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  const auto adj = adjacency_lists(g);
  std::vector<char> visited(static_cast<std::size_t>(g.n), 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n;
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace topomap
