#pragma once

// Reference computations used only by the tests. Each one takes a different
// route from the library code it checks.

#include <algorithm>
#include <cmath>
#include <vector>

#include "simplexhull/geomcore.hpp"
#include "simplexhull/sampling.hpp"

namespace support {

using simplexhull::Matrixd;
using simplexhull::Vectord;

/// Laplace expansion along the first row.
inline double cofactor_determinant(const Matrixd& m) {
  const auto n = m.rows();
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  double det = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    Matrixd minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = m(r, c);
    det += ((j % 2) ? -1.0 : 1.0) * m(0, j) * cofactor_determinant(minor);
  }
  return det;
}

/// Area of the convex hull of planar points (columns), by monotone chain and
/// the shoelace formula.
inline double planar_hull_area(const Matrixd& pts) {
  std::vector<std::pair<double, double>> p;
  for (Eigen::Index j = 0; j < pts.cols(); ++j) p.emplace_back(pts(0, j), pts(1, j));
  std::sort(p.begin(), p.end());
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> hull(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], p[i - 1]) <= 0) --k;
    hull[k++] = p[i - 1];
  }
  hull.resize(k - 1);
  double area = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    area += a.first * b.second - b.first * a.second;
  }
  return std::abs(area) / 2;
}

/// sqrt(det(E^T E)) / (columns)! for an edge matrix E (d x k).
inline double gram_volume(const Matrixd& edges) {
  const Matrixd g = edges.transpose() * edges;
  double f = 1;
  for (int i = 2; i <= edges.cols(); ++i) f *= i;
  return std::sqrt(std::max(0.0, cofactor_determinant(g))) / f;
}

inline Matrixd random_matrix(int rows, int cols, simplexhull::Rng& rng) {
  std::normal_distribution<double> normal;
  Matrixd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
  return m;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

inline Matrixd mirror(const Matrixd& v, const Vectord& u) { return v - 2.0 * u * (u.transpose() * v); }

}  // namespace support
