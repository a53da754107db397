#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "topomap/errors.hpp"

namespace topomap {

// Hexagonal output lattice in axial (q, r) coordinates. Neuron j sits at
// coords[j]; distance is the standard axial hex metric, which makes the six
// surrounding cells of any cell all distance 1.
struct HexLattice {
  std::vector<std::pair<int, int>> coords;

  // Most compact patch for m cells: rows of ceil(sqrt(m)) columns with q
  // varying fastest. compact(6) is two rows of three.
  static HexLattice compact(int m) {
    if (m < 1) throw PreconditionError("lattice needs at least one neuron");
    const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m))));
    HexLattice lat;
    lat.coords.reserve(static_cast<std::size_t>(m));
    for (int idx = 0; idx < m; ++idx) lat.coords.emplace_back(idx % cols, idx / cols);
    return lat;
  }

  int size() const { return static_cast<int>(coords.size()); }

  double distance(int a, int b) const {
    if (a < 0 || b < 0 || a >= size() || b >= size())
      throw IndexOutOfRange("neuron index out of range: " + std::to_string(a) + ", " +
                            std::to_string(b) + " on lattice of " + std::to_string(size()));
    const double dq = static_cast<double>(coords[static_cast<std::size_t>(a)].first -
                                          coords[static_cast<std::size_t>(b)].first);
    const double dr = static_cast<double>(coords[static_cast<std::size_t>(a)].second -
                                          coords[static_cast<std::size_t>(b)].second);
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2.0;
  }
};

}  // namespace topomap
