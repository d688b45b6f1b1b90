#include "simplexhull/hull_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "simplexhull/lp.hpp"

namespace simplexhull {
namespace {

using Mask = std::uint64_t;

struct Hull {
  std::vector<HullFacet> facets;
  std::vector<Mask> masks;
  double volume = 0;
  std::vector<int> vertices;
  Vectord interior;
};

int affine_rank(const Matrixd& pts, double tol) {
  if (pts.cols() <= 1) return 0;
  const Matrixd centered = pts.colwise() - pts.rowwise().mean();
  const Eigen::JacobiSVD<Matrixd> svd(centered);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  return rank;
}

bool next_combination(std::vector<int>& idx, int m) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j)
    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

Hull build(const Matrixd& pts, int dim, double tol);

// (dim)-dimensional measure of the hull of `pts` (dim x m).
double measure(const Matrixd& pts, int dim, double tol) {
  if (dim == 0) return 1.0;
  if (dim == 1) return pts.row(0).maxCoeff() - pts.row(0).minCoeff();
  return build(pts, dim, tol).volume;
}

Hull build(const Matrixd& pts, int dim, double tol) {
  const int m = static_cast<int>(pts.cols());
  const int rank = affine_rank(pts, tol);
  if (rank < dim) throw DegenerateHull(rank, dim);
  const Vectord centroid = pts.rowwise().mean();

  Hull hull;
  std::vector<int> idx(static_cast<std::size_t>(dim));
  std::iota(idx.begin(), idx.end(), 0);
  Matrixd edges(dim, dim - 1);
  do {
    Mask subset = 0;
    for (int i : idx) subset |= Mask{1} << i;
    if (std::any_of(hull.masks.begin(), hull.masks.end(),
                    [subset](Mask f) { return (f & subset) == subset; }))
      continue;

    const Vectord origin = pts.col(idx[0]);
    for (int j = 1; j < dim; ++j) edges.col(j - 1) = pts.col(idx[static_cast<std::size_t>(j)]) - origin;
    const Eigen::JacobiSVD<Matrixd> svd(edges, Eigen::ComputeFullU);
    if (svd.singularValues()(dim - 2) <= tol) continue;
    Vectord normal = svd.matrixU().col(dim - 1);
    double offset = normal.dot(origin);
    if (normal.dot(centroid) > offset) {
      normal = -normal;
      offset = -offset;
    }

    const Eigen::RowVectorXd heights = normal.transpose() * pts;
    if ((heights.array() > offset + tol).any()) continue;

    Mask members = 0;
    for (int j = 0; j < m; ++j)
      if (std::abs(heights(j) - offset) <= tol) members |= Mask{1} << j;
    if (std::find(hull.masks.begin(), hull.masks.end(), members) != hull.masks.end()) continue;
    hull.masks.push_back(members);
  } while (next_combination(idx, m));

  // Refit each facet hyperplane to all of its members and measure it inside
  // that hyperplane.
  hull.facets.reserve(hull.masks.size());
  for (Mask mask : hull.masks) {
    HullFacet f;
    for (int j = 0; j < m; ++j)
      if (mask & (Mask{1} << j)) f.members.push_back(j);
    Matrixd member_pts(dim, static_cast<Eigen::Index>(f.members.size()));
    for (std::size_t j = 0; j < f.members.size(); ++j)
      member_pts.col(static_cast<Eigen::Index>(j)) = pts.col(f.members[j]);
    const Vectord mean = member_pts.rowwise().mean();
    const Matrixd centered = member_pts.colwise() - mean;
    const Eigen::JacobiSVD<Matrixd> svd(centered, Eigen::ComputeFullU);
    f.normal = svd.matrixU().col(dim - 1);
    f.offset = f.normal.dot(mean);
    if (f.normal.dot(centroid) > f.offset) {
      f.normal = -f.normal;
      f.offset = -f.offset;
    }
    const Matrixd projected = svd.matrixU().leftCols(dim - 1).transpose() * centered;
    f.measure = measure(projected, dim - 1, tol);
    hull.facets.push_back(std::move(f));
  }

  // A point is a vertex iff the normals of the facets through it span R^dim.
  Vectord vertex_sum = Vectord::Zero(dim);
  for (int j = 0; j < m; ++j) {
    std::vector<const HullFacet*> incident;
    for (std::size_t k = 0; k < hull.masks.size(); ++k)
      if (hull.masks[k] & (Mask{1} << j)) incident.push_back(&hull.facets[k]);
    if (static_cast<int>(incident.size()) < dim) continue;
    Matrixd normals(dim, static_cast<Eigen::Index>(incident.size()));
    for (std::size_t k = 0; k < incident.size(); ++k)
      normals.col(static_cast<Eigen::Index>(k)) = incident[k]->normal;
    const Eigen::JacobiSVD<Matrixd> svd(normals);
    if (svd.singularValues()(dim - 1) > 1e-7) {
      hull.vertices.push_back(j);
      vertex_sum += pts.col(j);
    }
  }
  hull.interior = vertex_sum / static_cast<double>(hull.vertices.size());

  for (const auto& f : hull.facets)
    hull.volume += f.measure * (f.offset - f.normal.dot(hull.interior)) / dim;
  return hull;
}

}  // namespace

HullResult hull_volume(const Matrixd& points, int n) {
  if (n < 2 || n > kOracleMaxDimension)
    throw InputError("hull_volume: dimension must be in 2.." + std::to_string(kOracleMaxDimension));
  if (points.rows() != n) throw InputError("hull_volume: points have the wrong dimension");
  if (points.cols() < n + 1) throw InputError("hull_volume: need at least n+1 points");
  if (points.cols() > kOracleMaxPoints)
    throw InputError("hull_volume: at most " + std::to_string(kOracleMaxPoints) + " points");
  if (!points.allFinite()) throw InputError("hull_volume: non-finite coordinate");

  const Vectord centroid = points.rowwise().mean();
  const double scale = (points.colwise() - centroid).colwise().norm().maxCoeff();
  const double tol = kOracleRelativeTolerance * scale;
  if (!(scale > 0)) throw DegenerateHull(0, n);

  // Merge coincident points; `rep` maps representatives back to input indices.
  std::vector<int> rep;
  for (int j = 0; j < points.cols(); ++j) {
    const bool duplicate = std::any_of(rep.begin(), rep.end(), [&](int r) {
      return (points.col(j) - points.col(r)).norm() <= tol;
    });
    if (!duplicate) rep.push_back(j);
  }
  Matrixd unique(n, static_cast<Eigen::Index>(rep.size()));
  for (std::size_t j = 0; j < rep.size(); ++j) unique.col(static_cast<Eigen::Index>(j)) = points.col(rep[j]);
  if (unique.cols() < n + 1) throw DegenerateHull(affine_rank(unique, tol), n);

  Hull hull = build(unique, n, tol);

  HullResult out;
  out.dimension = n;
  out.volume = hull.volume;
  out.interior_point = hull.interior;
  out.tolerance = tol;
  for (int v : hull.vertices) out.vertex_indices.push_back(rep[static_cast<std::size_t>(v)]);
  for (auto& f : hull.facets) {
    f.members.clear();
    for (int j = 0; j < points.cols(); ++j)
      if (std::abs(f.normal.dot(points.col(j)) - f.offset) <= tol) f.members.push_back(j);
    out.facets.push_back(std::move(f));
  }
  std::sort(out.facets.begin(), out.facets.end(), [](const HullFacet& a, const HullFacet& b) {
    return std::lexicographical_compare(a.normal.begin(), a.normal.end(), b.normal.begin(),
                                        b.normal.end());
  });
  return out;
}

HullResult hull_volume(const std::vector<Vectord>& points, int n) {
  Matrixd m(n, static_cast<Eigen::Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != n) throw InputError("hull_volume: points have the wrong dimension");
    m.col(static_cast<Eigen::Index>(j)) = points[j];
  }
  return hull_volume(m, n);
}

bool hull_contains(const HullResult& hull, const Vectord& p) {
  if (p.size() != hull.dimension) throw InputError("hull_contains: dimension mismatch");
  return std::all_of(hull.facets.begin(), hull.facets.end(), [&p](const HullFacet& f) {
    return f.normal.dot(p) <= f.offset + 1e-9;
  });
}

double pyramid_volume_from(const HullResult& hull, const Vectord& apex) {
  if (apex.size() != hull.dimension) throw InputError("pyramid_volume_from: dimension mismatch");
  double total = 0;
  for (const auto& f : hull.facets) total += f.measure * (f.offset - f.normal.dot(apex));
  return total / hull.dimension;
}

double union_hull_volume(const Matrixd& a, const Matrixd& b) {
  if (a.rows() != b.rows()) throw InputError("union_hull_volume: dimension mismatch");
  Matrixd all(a.rows(), a.cols() + b.cols());
  all << a, b;
  return hull_volume(all, static_cast<int>(a.rows())).volume;
}

bool intersects(const Matrixd& va, const Matrixd& vb) {
  // Validates both vertex sets as nondegenerate simplices.
  const Simplexd sa(va);
  const Simplexd sb(vb);
  return intersects(sa, sb);
}

bool intersects(const Simplexd& a, const Simplexd& b) {
  if (a.dimension() != b.dimension()) throw InputError("intersects: dimension mismatch");
  const int n = a.dimension();
  const Matrixd va = a.world_vertices();
  const Matrixd vb = b.world_vertices();

  // Variables (lambda, mu) >= 0 with  Va lambda - Vb mu = 0,  sum lambda = sum mu = 1.
  Matrixd lhs = Matrixd::Zero(n + 2, 2 * (n + 1));
  lhs.topLeftCorner(n, n + 1) = va;
  lhs.topRightCorner(n, n + 1) = -vb;
  lhs.row(n).head(n + 1).setOnes();
  lhs.row(n + 1).tail(n + 1).setOnes();
  Vectord rhs = Vectord::Zero(n + 2);
  rhs(n) = 1.0;
  rhs(n + 1) = 1.0;

  const double scale = std::max({1.0, va.cwiseAbs().maxCoeff(), vb.cwiseAbs().maxCoeff()});
  const auto sol = lp::minimize(lhs, rhs, Vectord::Zero(2 * (n + 1)), 1e-9 * scale);
  return sol.status != lp::Status::kInfeasible;
}

}  // namespace simplexhull
