#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "topomap/errors.hpp"
#include "topomap/graph.hpp"
#include "topomap/labels.hpp"
#include "topomap/rng.hpp"

namespace topomap {

// One of the three topology families together with its generation parameter.
struct TopologyClass {
  struct Regular {
    int degree = 3;
  };
  struct Random {
    double edge_probability = 0.0;
  };
  struct ScaleFree {
    int edges_per_node = 1;
  };

  std::variant<Regular, Random, ScaleFree> value;

  MacroLabel macro() const {
    if (std::holds_alternative<Regular>(value)) return MacroLabel::kRegular;
    if (std::holds_alternative<Random>(value)) return MacroLabel::kRandom;
    return MacroLabel::kScaleFree;
  }

  void validate() const {
    if (const auto* r = std::get_if<Regular>(&value)) {
      if (r->degree < 1) throw PreconditionError("regular degree must be >= 1");
    } else if (const auto* e = std::get_if<Random>(&value)) {
      if (!(e->edge_probability >= 0.0 && e->edge_probability <= 1.0))
        throw PreconditionError("edge probability must lie in [0, 1]");
    } else if (const auto* s = std::get_if<ScaleFree>(&value)) {
      if (s->edges_per_node < 1) throw PreconditionError("edges per node must be >= 1");
    }
  }
};

// r-regular graph via the pairing (configuration) model: lay out r stubs per
// node and pair them off one draw at a time, where the partner stub is drawn
// uniformly among the stubs that keep the graph simple (no self-loop, no
// duplicate edge). When a stub is left with no valid partner the attempt is
// stuck and the whole pairing restarts from scratch. This pair-by-pair
// conditioning is the standard practical pairing variant: near-uniform over
// simple r-regular graphs, and it stays feasible for dense degrees where
// whole-pairing rejection would almost never draw a simple graph.
inline Graph gen_regular(int n, int r, std::uint64_t seed, int max_restarts = 1000) {
  if (n < 1) throw PreconditionError("graph needs at least one node");
  if (r < 1 || r >= n)
    throw InfeasibleDegree("degree must satisfy 1 <= r < n, got r=" + std::to_string(r) +
                           " with n=" + std::to_string(n));
  if ((static_cast<long long>(n) * r) % 2 != 0)
    throw InfeasibleDegree("n*r must be even, got n=" + std::to_string(n) +
                           " r=" + std::to_string(r));

  Xoshiro256 rng(seed);
  std::vector<int> stubs;
  std::vector<std::size_t> candidates;
  std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(n));

  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < r; ++k) stubs.push_back(v);
    for (auto& adj : neighbors) adj.clear();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(stubs.size() / 2);

    bool stuck = false;
    while (!stubs.empty()) {
      const int a = stubs.back();
      stubs.pop_back();
      candidates.clear();
      const auto& known = neighbors[static_cast<std::size_t>(a)];
      for (std::size_t idx = 0; idx < stubs.size(); ++idx) {
        const int b = stubs[idx];
        if (b == a) continue;
        if (std::find(known.begin(), known.end(), b) != known.end()) continue;
        candidates.push_back(idx);
      }
      if (candidates.empty()) {
        stuck = true;
        break;
      }
      const std::size_t idx = candidates[rng.below(candidates.size())];
      const int b = stubs[idx];
      stubs[idx] = stubs.back();
      stubs.pop_back();
      neighbors[static_cast<std::size_t>(a)].push_back(b);
      neighbors[static_cast<std::size_t>(b)].push_back(a);
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (stuck) continue;
    std::sort(edges.begin(), edges.end());
    return Graph{n, std::move(edges)};
  }
  throw GenerationExhausted("pairing model gave no simple " + std::to_string(r) +
                            "-regular graph on " + std::to_string(n) + " nodes after " +
                            std::to_string(max_restarts) + " restarts");
}

// Erdos-Renyi G(n, p): each unordered pair independently with probability p.
// Pairs are visited in fixed (i, j) order, so a seed pins the exact graph.
inline Graph gen_random(int n, double p, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("graph needs at least one node");
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability must lie in [0, 1]");
  Xoshiro256 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_double() < p) edges.emplace_back(i, j);
  return Graph{n, std::move(edges)};
}

// Barabasi-Albert preferential attachment: seed clique on m+1 nodes, then
// each new node attaches m edges to distinct existing nodes, chosen with
// probability proportional to degree at the start of the step. Sampling uses
// a stub list (one entry per edge endpoint); repeats within a step redraw,
// which leaves the marginal distribution proportional to degree among the
// not-yet-chosen nodes.
inline Graph gen_scale_free(int n, int m, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("graph needs at least one node");
  if (m < 1 || m + 1 > n)
    throw PreconditionError("edges per node must satisfy 1 <= m <= n-1, got m=" +
                            std::to_string(m) + " with n=" + std::to_string(n));

  Xoshiro256 rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> stubs;
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      edges.emplace_back(i, j);
      stubs.push_back(i);
      stubs.push_back(j);
    }

  std::vector<char> picked(static_cast<std::size_t>(n), 0);
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(m));
  for (int v = m + 1; v < n; ++v) {
    chosen.clear();
    while (static_cast<int>(chosen.size()) < m) {
      const int target = stubs[rng.below(stubs.size())];
      if (!picked[static_cast<std::size_t>(target)]) {
        picked[static_cast<std::size_t>(target)] = 1;
        chosen.push_back(target);
      }
    }
    for (int target : chosen) {
      edges.emplace_back(target, v);
      stubs.push_back(target);
      stubs.push_back(v);
      picked[static_cast<std::size_t>(target)] = 0;
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace topomap
