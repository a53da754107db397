#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "topomap/errors.hpp"
#include "topomap/graph.hpp"

namespace topomap {

// Dense symmetric matrix, row-major. set() writes both mirror entries, so
// the stored matrix is symmetric exactly as stored, not just up to rounding.
class SymMatrix {
 public:
  explicit SymMatrix(int dim)
      : dim_(dim), a_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0) {
    if (dim < 1) throw PreconditionError("matrix order must be positive");
  }

  int dim() const { return dim_; }

  double operator()(int i, int j) const { return a_[index(i, j)]; }

  void set(int i, int j, double v) {
    a_[index(i, j)] = v;
    a_[index(j, i)] = v;
  }

  const std::vector<double>& data() const { return a_; }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
  }

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
      throw IndexOutOfRange("matrix index (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside order " + std::to_string(dim_));
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(j);
  }

  int dim_;
  std::vector<double> a_;
};

inline SymMatrix adjacency(const Graph& g) {
  SymMatrix m(g.n);
  for (const auto& [a, b] : g.edges) m.set(a, b, 1.0);
  return m;
}

// Descending-sorted adjacency spectrum: the permutation-invariant fingerprint
// the whole pipeline runs on.
struct SpectralSignature {
  std::vector<double> values;  // non-increasing
  int source_n = 0;
};

// Full eigensystem for the places that need directions too (the 2-D
// projection). vectors[k] is the unit eigenvector paired with values[k].
struct EigenSystem {
  std::vector<double> values;                // descending
  std::vector<std::vector<double>> vectors;  // row k pairs with values[k]
};

namespace detail {

inline constexpr double kJacobiTolFactor = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic Jacobi on a flat row-major copy of a symmetric matrix. Each sweep
// rotates every upper pair (p, q) in order; rotations optionally accumulate
// into `vec` (row-major, starts as identity) whose columns become the
// eigenvectors. Convergence is declared once the off-diagonal Frobenius norm
// falls to 1e-12 of the input Frobenius norm; the <= comparison makes the
// zero matrix converge immediately. Symmetric Jacobi needs only a handful of
// sweeps, so exceeding the 100-sweep budget signals broken input (NaNs) or a
// solver bug, and is reported rather than silently returned.
inline void jacobi_diagonalize(std::vector<double>& a, int n, std::vector<double>* vec) {
  const std::size_t stride = static_cast<std::size_t>(n);
  const auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)];
  };

  double input_norm = 0.0;
  for (double v : a) input_norm += v * v;
  input_norm = std::sqrt(input_norm);
  const double tol = kJacobiTolFactor * input_norm;

  const auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
    return std::sqrt(2.0 * s);
  };

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_norm() <= tol) return;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        // Stable symmetric Schur decomposition of the 2x2 block.
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                    : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(p, k) = at(k, p);
          at(k, q) = s * akp + c * akq;
          at(q, k) = at(k, q);
        }
        if (vec) {
          for (int k = 0; k < n; ++k) {
            double& vkp = (*vec)[static_cast<std::size_t>(k) * stride + static_cast<std::size_t>(p)];
            double& vkq = (*vec)[static_cast<std::size_t>(k) * stride + static_cast<std::size_t>(q)];
            const double np = c * vkp - s * vkq;
            const double nq = s * vkp + c * vkq;
            vkp = np;
            vkq = nq;
          }
        }
      }
    }
  }
  if (off_norm() <= tol) return;
  throw NotConverged("Jacobi eigensolver missed tolerance after " +
                     std::to_string(kJacobiMaxSweeps) + " sweeps (order " +
                     std::to_string(n) + ")");
}

}  // namespace detail

// Eigenvalues of a symmetric matrix, descending.
inline SpectralSignature eigenvalues(const SymMatrix& m) {
  const int n = m.dim();
  std::vector<double> a = m.data();
  detail::jacobi_diagonalize(a, n, nullptr);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    values[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * n + i];
  std::sort(values.begin(), values.end(), std::greater<>());
  return SpectralSignature{std::move(values), n};
}

// Eigenvalues plus unit eigenvectors, both ordered by descending eigenvalue.
inline EigenSystem eigen_decompose(const SymMatrix& m) {
  const int n = m.dim();
  std::vector<double> a = m.data();
  std::vector<double> vec(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) vec[static_cast<std::size_t>(i) * n + i] = 1.0;
  detail::jacobi_diagonalize(a, n, &vec);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a[static_cast<std::size_t>(x) * n + x] > a[static_cast<std::size_t>(y) * n + y];
  });

  EigenSystem out;
  out.values.reserve(static_cast<std::size_t>(n));
  out.vectors.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (int k = 0; k < n; ++k) {
    const int col = order[static_cast<std::size_t>(k)];
    out.values.push_back(a[static_cast<std::size_t>(col) * n + col]);
    for (int i = 0; i < n; ++i)
      out.vectors[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
          vec[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(col)];
  }
  return out;
}

inline SpectralSignature signature_of(const Graph& g) { return eigenvalues(adjacency(g)); }

}  // namespace topomap
