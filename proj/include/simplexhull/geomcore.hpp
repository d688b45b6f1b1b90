#pragma once

// Dense linear algebra and isometry primitives. Points are Eigen column
// vectors; point sets are matrices whose columns are the points.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <type_traits>
#include <variant>
#include <vector>

#include "simplexhull/errors.hpp"

namespace simplexhull {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vectord = Vector<double>;
using Matrixd = Matrix<double>;

/// Largest ambient dimension supported by the closed-form modules.
inline constexpr int kMaxDimension = 8;

/// Gram matrix of the columns of `columns`: G(i,j) = <c_i, c_j>.
template <typename Derived>
Matrix<typename Derived::Scalar> gram_matrix(const Eigen::MatrixBase<Derived>& columns) {
  return columns.transpose() * columns;
}

/// Gram matrix of a list of vectors. All vectors must share one dimension.
template <typename Scalar>
Matrix<Scalar> gram_matrix(std::span<const Vector<Scalar>> vectors) {
  const auto count = static_cast<Eigen::Index>(vectors.size());
  if (count == 0) return Matrix<Scalar>(0, 0);
  const auto dim = vectors.front().size();
  Matrix<Scalar> columns(dim, count);
  for (Eigen::Index j = 0; j < count; ++j) {
    const auto& v = vectors[static_cast<std::size_t>(j)];
    if (v.size() != dim) throw InputError("gram_matrix: vectors have different dimensions");
    columns.col(j) = v;
  }
  return gram_matrix(columns);
}

template <typename Scalar>
Matrix<Scalar> gram_matrix(const std::vector<Vector<Scalar>>& vectors) {
  return gram_matrix(std::span<const Vector<Scalar>>(vectors));
}

/// Determinant; closed-form cofactor expansion up to 3x3, partial-pivot LU above.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw InputError("determinant: matrix is not square");
  switch (m.rows()) {
    case 0:
      return Scalar(1);
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default: {
      Matrix<Scalar> dense = m;
      return dense.partialPivLu().determinant();
    }
  }
}

/// True when |det m| < 1e-12 * (max column norm)^n.
template <typename Derived>
bool is_singular(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  using std::pow;
  const auto n = m.rows();
  Scalar scale(0);
  for (Eigen::Index j = 0; j < m.cols(); ++j) scale = std::max<Scalar>(scale, m.col(j).norm());
  if (scale == Scalar(0)) return true;
  return abs(determinant(m)) < Scalar(1e-12) * pow(scale, static_cast<int>(n));
}

template <typename Derived>
Matrix<typename Derived::Scalar> matrix_inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw InputError("matrix_inverse: matrix is not square");
  if (is_singular(m)) throw SingularMatrix("matrix_inverse: matrix is singular");
  Matrix<Scalar> dense = m;
  return dense.fullPivLu().inverse();
}

// ---------------------------------------------------------------------------
// Isometries

template <typename Scalar>
struct Translation {
  Vector<Scalar> offset;
};

template <typename Scalar>
struct PointReflection {
  Vector<Scalar> center;
};

/// Reflection in the hyperplane {p : <p, normal> = 0}.
template <typename Scalar>
class HyperplaneReflection {
 public:
  explicit HyperplaneReflection(Vector<Scalar> unit_normal) : normal_(std::move(unit_normal)) {
    using std::abs;
    if (normal_.size() == 0 || !(abs(normal_.norm() - Scalar(1)) <= Scalar(1e-12)))
      throw InputError("HyperplaneReflection: normal must have unit length");
  }

  /// Normalizes `direction` first; throws for a zero vector.
  static HyperplaneReflection from_direction(const Vector<Scalar>& direction) {
    const Scalar len = direction.norm();
    if (!(len > Scalar(0))) throw InputError("HyperplaneReflection: zero direction");
    return HyperplaneReflection(direction / len);
  }

  const Vector<Scalar>& normal() const noexcept { return normal_; }

 private:
  Vector<Scalar> normal_;
};

template <typename Scalar>
using Isometry =
    std::variant<Translation<Scalar>, PointReflection<Scalar>, HyperplaneReflection<Scalar>>;

using Isometryd = Isometry<double>;

template <typename Scalar>
Eigen::Index isometry_dimension(const Isometry<Scalar>& iso) {
  return std::visit(
      [](const auto& s) -> Eigen::Index {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Translation<Scalar>>)
          return s.offset.size();
        else if constexpr (std::is_same_v<T, PointReflection<Scalar>>)
          return s.center.size();
        else
          return s.normal().size();
      },
      iso);
}

template <typename Scalar>
Vector<Scalar> apply_isometry(const Isometry<Scalar>& iso, const Vector<Scalar>& p) {
  if (isometry_dimension(iso) != p.size())
    throw InputError("apply_isometry: dimension mismatch");
  return std::visit(
      [&p](const auto& s) -> Vector<Scalar> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Translation<Scalar>>)
          return p + s.offset;
        else if constexpr (std::is_same_v<T, PointReflection<Scalar>>)
          return Scalar(2) * s.center - p;
        else
          return p - Scalar(2) * p.dot(s.normal()) * s.normal();
      },
      iso);
}

/// Applies `iso` to every column of `points`.
template <typename Scalar>
Matrix<Scalar> apply_isometry(const Isometry<Scalar>& iso, const Matrix<Scalar>& points) {
  Matrix<Scalar> out(points.rows(), points.cols());
  for (Eigen::Index j = 0; j < points.cols(); ++j)
    out.col(j) = apply_isometry<Scalar>(iso, Vector<Scalar>(points.col(j)));
  return out;
}

}  // namespace simplexhull
