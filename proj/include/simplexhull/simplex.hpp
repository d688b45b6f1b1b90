#pragma once

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "simplexhull/geomcore.hpp"

namespace simplexhull {

/// Facet F_i of a simplex, i.e. the facet opposite vertex i.
template <typename Scalar>
struct FacetData {
  int opposite_vertex_index = 0;
  Vector<Scalar> unit_outward_normal;
  Vector<Scalar> centroid;
  Scalar facet_volume{};  ///< (n-1)-dimensional measure
  Scalar height{};        ///< distance from the opposite vertex to aff F_i
};

inline double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// An n-simplex given by n+1 affinely independent vertices in R^n.
///
/// The simplex is stored canonically: vertex 0 sits at the origin and the
/// removed translation is kept as `anchor()`. Every accessor except
/// `world_vertices()` reports canonical coordinates, which is the frame all
/// closed-form formulas use. Facet data is computed once at construction.
template <typename Scalar>
class Simplex {
 public:
  /// `vertices` is n x (n+1); column i is vertex i.
  explicit Simplex(const Matrix<Scalar>& vertices) { init(vertices); }

  explicit Simplex(const std::vector<Vector<Scalar>>& vertices) {
    if (vertices.empty()) throw InputError("Simplex: no vertices");
    Matrix<Scalar> m(vertices.front().size(), static_cast<Eigen::Index>(vertices.size()));
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (vertices[j].size() != m.rows()) throw InputError("Simplex: vertex dimension mismatch");
      m.col(static_cast<Eigen::Index>(j)) = vertices[j];
    }
    init(m);
  }

  int dimension() const noexcept { return n_; }

  /// Canonical vertex i (vertex 0 is the origin).
  Vector<Scalar> vertex(int i) const { return vertices_.col(i); }
  const Matrix<Scalar>& vertices() const noexcept { return vertices_; }

  /// M = [s_1, ..., s_n], the edge vectors issuing from vertex 0.
  Matrix<Scalar> edge_matrix() const { return vertices_.rightCols(n_); }

  const Vector<Scalar>& anchor() const noexcept { return anchor_; }
  Matrix<Scalar> world_vertices() const { return vertices_.colwise() + anchor_; }

  Scalar volume() const noexcept { return volume_; }
  const std::vector<FacetData<Scalar>>& facets() const noexcept { return facets_; }
  const FacetData<Scalar>& facet(int i) const { return facets_.at(static_cast<std::size_t>(i)); }

  /// s = s_1 + ... + s_n.
  const Vector<Scalar>& vertex_sum() const noexcept { return vertex_sum_; }

  /// Barycentric coordinates of a canonical-frame point.
  Vector<Scalar> barycentric(const Vector<Scalar>& p) const {
    if (p.size() != n_) throw InputError("barycentric: dimension mismatch");
    Vector<Scalar> out(n_ + 1);
    out.tail(n_) = dual_ * p;
    out(0) = Scalar(1) - out.tail(n_).sum();
    return out;
  }

  /// Same simplex with vertex `root` moved to slot 0; the remaining vertices
  /// keep their relative order. See `reroot_order`.
  Simplex rerooted(int root) const {
    const auto order = reroot_order(n_, root);
    Matrix<Scalar> world(n_, n_ + 1);
    const Matrix<Scalar> w = world_vertices();
    for (int j = 0; j <= n_; ++j) world.col(j) = w.col(order[static_cast<std::size_t>(j)]);
    return Simplex(world);
  }

  /// order[j] = original index of the vertex placed in slot j by `rerooted(root)`.
  static std::vector<int> reroot_order(int n, int root) {
    if (root < 0 || root > n) throw InputError("reroot: vertex index out of range");
    std::vector<int> order{root};
    for (int j = 0; j <= n; ++j)
      if (j != root) order.push_back(j);
    return order;
  }

 private:
  void init(const Matrix<Scalar>& world) {
    n_ = static_cast<int>(world.rows());
    if (n_ < 1 || n_ > kMaxDimension)
      throw InputError("Simplex: dimension must be in 1.." + std::to_string(kMaxDimension));
    if (world.cols() != n_ + 1) throw InputError("Simplex: expected n+1 vertices");
    if (!world.allFinite()) throw InputError("Simplex: non-finite coordinate");

    anchor_ = world.col(0);
    vertices_ = world.colwise() - anchor_;

    Scalar max_edge(0);
    for (int i = 0; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        max_edge = std::max<Scalar>(max_edge, (vertices_.col(i) - vertices_.col(j)).norm());

    using std::abs;
    using std::pow;
    using std::sqrt;
    const Matrix<Scalar> m = edge_matrix();
    volume_ = abs(determinant(m)) / Scalar(factorial(n_));
    if (!(max_edge > Scalar(0)) || volume_ < Scalar(1e-12) * pow(max_edge, n_))
      throw DegenerateSimplex("Simplex: vertices are affinely dependent");

    // Rows of M^{-1} are the dual basis: row_i . s_j = delta_ij.
    dual_ = m.fullPivLu().inverse();
    vertex_sum_ = m.rowwise().sum();

    facets_.clear();
    facets_.reserve(static_cast<std::size_t>(n_ + 1));
    for (int i = 0; i <= n_; ++i) {
      FacetData<Scalar> f;
      f.opposite_vertex_index = i;
      // Facet 0 is the level set {row-sum functional = 1}; facet i >= 1 is
      // {row_i functional = 0}, with vertex i at level 1.
      const Vector<Scalar> g =
          i == 0 ? Vector<Scalar>(dual_.colwise().sum().transpose())
                 : Vector<Scalar>(-dual_.row(i - 1).transpose());
      f.height = Scalar(1) / g.norm();
      f.unit_outward_normal = g * f.height;

      Matrix<Scalar> members(n_, n_);
      for (int j = 0, c = 0; j <= n_; ++j)
        if (j != i) members.col(c++) = vertices_.col(j);
      f.centroid = members.rowwise().mean();
      const Matrix<Scalar> edges = members.rightCols(n_ - 1).colwise() - members.col(0);
      const Scalar gram_det = determinant(gram_matrix(edges));
      f.facet_volume = sqrt(std::max<Scalar>(gram_det, Scalar(0))) / Scalar(factorial(n_ - 1));
      facets_.push_back(std::move(f));
    }
  }

  int n_ = 0;
  Vector<Scalar> anchor_;
  Matrix<Scalar> vertices_;
  Matrix<Scalar> dual_;
  Vector<Scalar> vertex_sum_;
  Scalar volume_{};
  std::vector<FacetData<Scalar>> facets_;
};

using Simplexd = Simplex<double>;
using FacetDatad = FacetData<double>;

template <typename Scalar>
Scalar volume(const Simplex<Scalar>& s) {
  return s.volume();
}

template <typename Scalar>
const std::vector<FacetData<Scalar>>& facet_data(const Simplex<Scalar>& s) {
  return s.facets();
}

template <typename Scalar>
const Vector<Scalar>& vertex_sum(const Simplex<Scalar>& s) {
  return s.vertex_sum();
}

/// Regular n-simplex with s_0 = 0, |s_i| = 1 and <s_i, s_j> = 1/2, built from
/// the Cholesky factor of its Gram matrix.
template <typename Scalar = double>
Simplex<Scalar> regular_simplex(int n) {
  if (n < 2 || n > kMaxDimension)
    throw InputError("regular_simplex: n must be in 2.." + std::to_string(kMaxDimension));
  const Matrix<Scalar> gram =
      (Matrix<Scalar>::Identity(n, n) + Matrix<Scalar>::Ones(n, n)) / Scalar(2);
  const Matrix<Scalar> lower = gram.llt().matrixL();
  Matrix<Scalar> vertices = Matrix<Scalar>::Zero(n, n + 1);
  vertices.rightCols(n) = lower.transpose();
  return Simplex<Scalar>(vertices);
}

/// max over i != j of |s_i| / m_j, with m_j the height at vertex j.
template <typename Scalar>
Scalar min_height_ratio(const Simplex<Scalar>& s) {
  const int n = s.dimension();
  Scalar best(0);
  for (int i = 1; i <= n; ++i) {
    const Scalar len = s.vertex(i).norm();
    for (int j = 0; j <= n; ++j)
      if (j != i) best = std::max<Scalar>(best, len / s.facet(j).height);
  }
  return best;
}

}  // namespace simplexhull
