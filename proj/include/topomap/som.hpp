#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "topomap/errors.hpp"
#include "topomap/hex_lattice.hpp"
#include "topomap/rng.hpp"
#include "topomap/types.hpp"

namespace topomap {

// Kohonen training schedule: online updates, linear decay with floors for
// both the learning rate and the neighborhood radius, one full reshuffled
// pass over the data per epoch.
struct TrainConfig {
  int epochs = 2000;
  double alpha0 = 0.5;
  double alpha_min = 0.01;
  double sigma0 = 3.0;
  double sigma_min = 0.25;
  std::uint64_t shuffle_seed = 0;
  double init_jitter = 1e-4;

  void validate() const {
    if (epochs < 1) throw PreconditionError("epochs must be >= 1");
    if (!(alpha_min > 0.0 && alpha_min <= alpha0 && alpha0 <= 1.0))
      throw PreconditionError("need 0 < alpha_min <= alpha0 <= 1");
    if (!(sigma_min > 0.0 && sigma_min <= sigma0))
      throw PreconditionError("need 0 < sigma_min <= sigma0");
    if (!(init_jitter >= 0.0)) throw PreconditionError("init_jitter must be >= 0");
  }
};

inline double learning_rate(const TrainConfig& c, int t) {
  return std::max(c.alpha_min,
                  c.alpha0 * (1.0 - static_cast<double>(t) / static_cast<double>(c.epochs)));
}

inline double neighborhood_radius(const TrainConfig& c, int t) {
  return std::max(c.sigma_min,
                  c.sigma0 * (1.0 - static_cast<double>(t) / static_cast<double>(c.epochs)));
}

// Gaussian neighborhood over lattice distance; 1 at the winner itself.
inline double neighborhood(double lattice_dist, double sigma) {
  return std::exp(-(lattice_dist * lattice_dist) / (2.0 * sigma * sigma));
}

struct Som {
  HexLattice lattice;
  std::vector<std::vector<double>> weights;  // one row per neuron

  int neuron_count() const { return static_cast<int>(weights.size()); }
  int dim() const { return weights.empty() ? 0 : static_cast<int>(weights[0].size()); }
};

namespace detail {

// Domain separation for the two RNG consumers that share shuffle_seed.
inline constexpr std::uint64_t kInitStreamTag = 0x696e69746a697474ull;     // "initjitt"
inline constexpr std::uint64_t kShuffleStreamTag = 0x65706f6368726e67ull;  // "epochrng"

inline std::pair<std::size_t, std::size_t> checked_shape(const DataMatrix& data) {
  if (data.empty()) throw EmptyDataset("dataset is empty");
  const std::size_t d = data.front().size();
  if (d == 0) throw DimensionMismatch("samples must have at least one component");
  for (const auto& row : data) {
    if (row.size() != d)
      throw DimensionMismatch("ragged dataset: row of length " + std::to_string(row.size()) +
                              " vs " + std::to_string(d));
    for (double v : row) {
      if (!std::isfinite(v)) throw Error(ErrorKind::kData, "non-finite sample component");
    }
  }
  return {data.size(), d};
}

}  // namespace detail

// All neurons start coincident at the data mean, plus a seeded jitter of at
// most init_jitter standard deviations per component, so the initial map is
// one tight spot that training has to pull apart.
inline Som init_som(const DataMatrix& data, const TrainConfig& config,
                    HexLattice lattice = HexLattice::compact(6)) {
  config.validate();
  const auto [n, d] = detail::checked_shape(data);

  std::vector<double> mean(d, 0.0);
  for (const auto& row : data)
    for (std::size_t c = 0; c < d; ++c) mean[c] += row[c];
  for (double& v : mean) v /= static_cast<double>(n);

  std::vector<double> stdev(d, 0.0);
  for (const auto& row : data)
    for (std::size_t c = 0; c < d; ++c) {
      const double dv = row[c] - mean[c];
      stdev[c] += dv * dv;
    }
  for (double& v : stdev) v = std::sqrt(v / static_cast<double>(n));

  const std::uint64_t stream = splitmix64(config.shuffle_seed ^ detail::kInitStreamTag);
  Som som;
  som.lattice = std::move(lattice);
  som.weights.assign(static_cast<std::size_t>(som.lattice.size()), std::vector<double>(d));
  for (int j = 0; j < som.lattice.size(); ++j) {
    Xoshiro256 rng(subseed(stream, static_cast<std::uint64_t>(j)));
    for (std::size_t c = 0; c < d; ++c) {
      const double u = 2.0 * rng.next_double() - 1.0;  // [-1, 1)
      som.weights[static_cast<std::size_t>(j)][c] = mean[c] + u * config.init_jitter * stdev[c];
    }
  }
  return som;
}

// Best-matching unit: index of the neuron with minimal Euclidean distance to
// x; ties go to the lowest index.
inline int bmu(const Som& som, const std::vector<double>& x) {
  if (som.neuron_count() == 0) throw EmptyDataset("map has no neurons");
  if (static_cast<int>(x.size()) != som.dim())
    throw DimensionMismatch("sample has " + std::to_string(x.size()) + " components, map has " +
                            std::to_string(som.dim()));
  int best = 0;
  double best_sq = -1.0;
  for (int j = 0; j < som.neuron_count(); ++j) {
    const auto& w = som.weights[static_cast<std::size_t>(j)];
    double sq = 0.0;
    for (std::size_t c = 0; c < x.size(); ++c) {
      const double dv = x[c] - w[c];
      sq += dv * dv;
    }
    if (best_sq < 0.0 || sq < best_sq) {
      best_sq = sq;
      best = j;
    }
  }
  return best;
}

// One online pass at schedule position t: visit samples in a seeded
// reshuffled order, and for each pull every neuron toward the sample by
// alpha(t) * h(d(j, winner), sigma(t)).
inline void train_epoch(Som& som, const DataMatrix& data, int t, const TrainConfig& config) {
  config.validate();
  if (t < 0 || t >= config.epochs)
    throw PreconditionError("epoch index " + std::to_string(t) + " outside schedule of " +
                            std::to_string(config.epochs));
  const auto [n, d] = detail::checked_shape(data);
  if (static_cast<int>(d) != som.dim())
    throw DimensionMismatch("dataset dimension " + std::to_string(d) + " vs map dimension " +
                            std::to_string(som.dim()));

  const double alpha = learning_rate(config, t);
  const double sigma = neighborhood_radius(config, t);
  const int m = som.neuron_count();

  // Lattice distances do not change; factor them out of the sample loop.
  std::vector<double> dist(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      dist[static_cast<std::size_t>(j) * static_cast<std::size_t>(m) + static_cast<std::size_t>(k)] =
          som.lattice.distance(j, k);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Xoshiro256 rng(subseed(splitmix64(config.shuffle_seed ^ detail::kShuffleStreamTag),
                         static_cast<std::uint64_t>(t)));
  shuffle(order, rng);

  for (std::size_t idx : order) {
    const auto& x = data[idx];
    const int winner = bmu(som, x);
    for (int j = 0; j < m; ++j) {
      const double lattice_dist =
          dist[static_cast<std::size_t>(j) * static_cast<std::size_t>(m) +
               static_cast<std::size_t>(winner)];
      const double f = alpha * neighborhood(lattice_dist, sigma);
      auto& w = som.weights[static_cast<std::size_t>(j)];
      for (std::size_t c = 0; c < d; ++c) w[c] += f * (x[c] - w[c]);
    }
  }
}

// Mean distance from each sample to its BMU weight.
inline double quantization_error(const Som& som, const DataMatrix& data) {
  const auto [n, d] = detail::checked_shape(data);
  if (static_cast<int>(d) != som.dim())
    throw DimensionMismatch("dataset dimension " + std::to_string(d) + " vs map dimension " +
                            std::to_string(som.dim()));
  double total = 0.0;
  for (const auto& x : data) {
    const int j = bmu(som, x);
    const auto& w = som.weights[static_cast<std::size_t>(j)];
    double sq = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      const double dv = x[c] - w[c];
      sq += dv * dv;
    }
    total += std::sqrt(sq);
  }
  return total / static_cast<double>(n);
}

struct TrainResult {
  Som som;
  std::vector<double> qe_history;  // quantization error after each epoch
};

inline TrainResult train(Som som, const DataMatrix& data, const TrainConfig& config) {
  config.validate();
  TrainResult result{std::move(som), {}};
  result.qe_history.reserve(static_cast<std::size_t>(config.epochs));
  for (int t = 0; t < config.epochs; ++t) {
    train_epoch(result.som, data, t, config);
    result.qe_history.push_back(quantization_error(result.som, data));
  }
  return result;
}

// Optional per-component z-scoring. Nothing applies it by default; callers
// that want scaled features run their data through this before init/train
// and push query vectors through the same transform.
struct Standardization {
  std::vector<double> mean;
  std::vector<double> scale;  // population std, 1.0 where a component is constant

  void apply(std::vector<double>& x) const {
    if (x.size() != mean.size()) throw DimensionMismatch("standardization dimension mismatch");
    for (std::size_t c = 0; c < x.size(); ++c) x[c] = (x[c] - mean[c]) / scale[c];
  }
};

inline Standardization standardize(DataMatrix& data) {
  const auto [n, d] = detail::checked_shape(data);
  Standardization s;
  s.mean.assign(d, 0.0);
  s.scale.assign(d, 0.0);
  for (const auto& row : data)
    for (std::size_t c = 0; c < d; ++c) s.mean[c] += row[c];
  for (double& v : s.mean) v /= static_cast<double>(n);
  for (const auto& row : data)
    for (std::size_t c = 0; c < d; ++c) {
      const double dv = row[c] - s.mean[c];
      s.scale[c] += dv * dv;
    }
  for (double& v : s.scale) {
    v = std::sqrt(v / static_cast<double>(n));
    if (v == 0.0) v = 1.0;
  }
  for (auto& row : data) s.apply(row);
  return s;
}

}  // namespace topomap
