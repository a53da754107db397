#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "topomap/errors.hpp"
#include "topomap/spectral.hpp"
#include "topomap/types.hpp"

namespace topomap {

// Orthonormal basis of the top-2 principal plane of a set of row vectors,
// computed from the sample covariance (n-1 denominator) with the same Jacobi
// solver that produces the spectra. Axes carry a fixed sign convention (the
// largest-magnitude component is positive) so the projection is reproducible
// and not up to an arbitrary flip.
struct PlaneProjection {
  std::vector<double> mean;
  std::vector<double> axis1;
  std::vector<double> axis2;
  double lambda1 = 0.0;
  double lambda2 = 0.0;

  std::pair<double, double> project(const std::vector<double>& x) const {
    if (x.size() != mean.size())
      throw DimensionMismatch("vector has " + std::to_string(x.size()) +
                              " components, projection expects " + std::to_string(mean.size()));
    double px = 0.0;
    double py = 0.0;
    for (std::size_t c = 0; c < x.size(); ++c) {
      const double dv = x[c] - mean[c];
      px += dv * axis1[c];
      py += dv * axis2[c];
    }
    return {px, py};
  }
};

namespace detail {

inline void fix_axis_sign(std::vector<double>& axis) {
  std::size_t arg = 0;
  for (std::size_t c = 1; c < axis.size(); ++c)
    if (std::abs(axis[c]) > std::abs(axis[arg])) arg = c;
  if (axis[arg] < 0.0)
    for (double& v : axis) v = -v;
}

}  // namespace detail

inline constexpr double kDegenerateVarianceFloor = 1e-12;

inline PlaneProjection principal_plane(const DataMatrix& rows) {
  if (rows.size() < 2)
    throw Error(ErrorKind::kData, "principal plane needs at least two rows");
  const std::size_t d = rows.front().size();
  if (d < 2) throw Error(ErrorKind::kData, "principal plane needs at least two dimensions");
  for (const auto& row : rows)
    if (row.size() != d) throw DimensionMismatch("ragged rows in projection input");

  PlaneProjection plane;
  plane.mean.assign(d, 0.0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < d; ++c) plane.mean[c] += row[c];
  for (double& v : plane.mean) v /= static_cast<double>(rows.size());

  SymMatrix cov(static_cast<int>(d));
  const double denom = static_cast<double>(rows.size() - 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      double s = 0.0;
      for (const auto& row : rows) s += (row[i] - plane.mean[i]) * (row[j] - plane.mean[j]);
      cov.set(static_cast<int>(i), static_cast<int>(j), s / denom);
    }
  }

  const EigenSystem eig = eigen_decompose(cov);
  plane.lambda1 = eig.values[0];
  plane.lambda2 = eig.values[1];
  if (plane.lambda1 < kDegenerateVarianceFloor && plane.lambda2 < kDegenerateVarianceFloor)
    throw DegenerateCovariance("top-2 covariance eigenvalues are below " +
                               std::to_string(kDegenerateVarianceFloor));
  plane.axis1 = eig.vectors[0];
  plane.axis2 = eig.vectors[1];
  detail::fix_axis_sign(plane.axis1);
  detail::fix_axis_sign(plane.axis2);
  return plane;
}

}  // namespace topomap
