#pragma once

// Brute-force convex hull volume for small point sets in R^n.
//
// Every n-subset of the input spans a candidate hyperplane; the hyperplane
// is a facet when all points lie weakly on one side. The volume is the sum of
// pyramids from an interior point over the facets, with each facet measure
// obtained by recursing one dimension down inside the facet hyperplane.
// Exhaustive and slow by design: this is the reference the closed forms are
// checked against, so it relies on nothing but linear algebra.

#include <vector>

#include "simplexhull/geomcore.hpp"
#include "simplexhull/simplex.hpp"

namespace simplexhull {

inline constexpr int kOracleMaxPoints = 64;
inline constexpr int kOracleMaxDimension = 7;
/// Relative coplanarity tolerance; the absolute value is this times the
/// largest distance of a point from the point-set centroid.
inline constexpr double kOracleRelativeTolerance = 1e-9;

struct HullFacet {
  Vectord normal;            ///< unit, pointing away from the interior
  double offset = 0;         ///< facet hyperplane is <normal, p> = offset
  std::vector<int> members;  ///< input indices within tolerance of the hyperplane
  double measure = 0;        ///< (n-1)-dimensional volume
};

struct HullResult {
  int dimension = 0;
  double volume = 0;
  std::vector<HullFacet> facets;  ///< sorted lexicographically by normal
  std::vector<int> vertex_indices;
  Vectord interior_point;
  double tolerance = 0;  ///< absolute coplanarity tolerance used
};

/// `points` is n x m with one point per column.
HullResult hull_volume(const Matrixd& points, int n);
HullResult hull_volume(const std::vector<Vectord>& points, int n);

/// True iff <normal, p> <= offset + 1e-9 for every facet.
bool hull_contains(const HullResult& hull, const Vectord& p);

/// Sum over facets of the signed pyramid volumes with apex `apex`. Equals
/// the hull volume for any apex in the hull's affine span.
double pyramid_volume_from(const HullResult& hull, const Vectord& apex);

/// Convenience: Vol(conv(columns of a, columns of b)).
double union_hull_volume(const Matrixd& a, const Matrixd& b);

/// Whether two simplices (world coordinates) share a point, decided by LP
/// feasibility of a common barycentric combination.
bool intersects(const Simplexd& a, const Simplexd& b);
bool intersects(const Matrixd& vertices_a, const Matrixd& vertices_b);

}  // namespace simplexhull
