#pragma once

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "topomap/graph.hpp"
#include "topomap/rng.hpp"

namespace testutil {

// Scratch directory for tests that touch the filesystem; removed on scope
// exit. A counter keeps directories distinct within one process.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("topomap-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path file(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// The diamond graph: K4 with one edge removed. Its spectrum is known in
// closed form, the roots of lambda * (lambda + 1) * (lambda^2 - lambda - 4):
//   (1 + sqrt(17))/2, 0, -1, (1 - sqrt(17))/2.
inline topomap::Graph diamond_graph() {
  return topomap::Graph::from_edges(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// The same topology with nodes 2 and 3 swapped; cospectral by construction.
inline topomap::Graph diamond_graph_relabeled() {
  return topomap::Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

inline std::vector<double> diamond_spectrum() {
  const double s = std::sqrt(17.0);
  return {(1.0 + s) / 2.0, 0.0, -1.0, (1.0 - s) / 2.0};  // descending
}

// Uniform random simple graph on n nodes: every edge subset equally likely.
inline topomap::Graph random_simple_graph(int n, topomap::Xoshiro256& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next() & 1u) edges.emplace_back(i, j);
  return topomap::Graph::from_edges(n, std::move(edges));
}

inline std::vector<int> random_permutation(int n, topomap::Xoshiro256& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  topomap::shuffle(perm, rng);
  return perm;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = a.size() == b.size() ? 0.0 : 1e300;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace testutil
