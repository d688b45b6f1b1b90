#pragma once

// Closed-form hull volumes for a simplex and its mirror image.
//
// Conventions: the simplex is canonical (s_0 = 0), the reflecting hyperplane
// H passes through the origin with unit normal u, and u is admissible, i.e.
// every vertex lies in the closed half-space <u, p> >= 0. The upper side is
// the set of facets whose outward normal has positive inner product with u;
// they are the facets seen from far away in direction u.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "simplexhull/simplex.hpp"

namespace simplexhull {

/// A facet counts as upper when <u_i, u> exceeds this; profile facets are dropped.
inline constexpr double kUpperFacetThreshold = 1e-10;
/// Allowed negative slack on <u, s_i> >= 0, relative to max(1, max |s_i|).
inline constexpr double kAdmissibilitySlack = 1e-12;
/// Unit-length tolerance for direction arguments.
inline constexpr double kUnitTolerance = 1e-10;

template <typename Scalar>
struct UpperSide {
  std::vector<int> facet_indices;  ///< i_1 < ... < i_k
  Vector<Scalar> direction;        ///< u, pointing into the upper half-space

  int count() const noexcept { return static_cast<int>(facet_indices.size()); }
};

template <typename Scalar>
struct RatioBreakdown {
  Scalar ratio{};                      ///< Vol(conv(S, S^H)) / Vol(S)
  std::vector<Scalar> per_facet_terms; ///< one summand per upper facet, already scaled by 2n
  std::vector<Scalar> denominators;    ///< |<u_i, (n+1) s_i - s>| per upper facet
  UpperSide<Scalar> upper_side;
};

/// Evaluates the mirror-hull ratio of one fixed simplex for many directions.
/// Facet quantities are cached; per-call work is O(n^2) with no allocation
/// on the scalar path.
template <typename Scalar>
class ReflectionRatio {
 public:
  explicit ReflectionRatio(const Simplex<Scalar>& s)
      : n_(s.dimension()),
        vertices_(s.vertices()),
        normals_(s.dimension(), s.dimension() + 1),
        sum_(s.vertex_sum()),
        denominators_(s.dimension() + 1),
        products_(s.dimension() + 1) {
    Scalar max_norm(1);
    for (int i = 0; i <= n_; ++i) {
      const auto& f = s.facet(i);
      normals_.col(i) = f.unit_outward_normal;
      using std::abs;
      denominators_(i) =
          abs(f.unit_outward_normal.dot(Scalar(n_ + 1) * vertices_.col(i) - sum_));
      max_norm = std::max<Scalar>(max_norm, vertices_.col(i).norm());
    }
    slack_ = Scalar(kAdmissibilitySlack) * max_norm;
  }

  int dimension() const noexcept { return n_; }

  /// Per-facet denominators |<u_i, (n+1) s_i - s>|, equal to n times the heights.
  const Vector<Scalar>& denominators() const noexcept { return denominators_; }

  bool is_unit(const Vector<Scalar>& u) const {
    using std::abs;
    return u.size() == n_ && abs(u.norm() - Scalar(1)) <= Scalar(kUnitTolerance);
  }

  bool admissible(const Vector<Scalar>& u) const {
    for (int i = 1; i <= n_; ++i)
      if (vertices_.col(i).dot(u) < -slack_) return false;
    return true;
  }

  /// Ratio for an admissible unit u, or nothing when u is inadmissible.
  std::optional<Scalar> operator()(const Vector<Scalar>& u) const {
    if (!admissible(u)) return std::nullopt;
    products_.noalias() = normals_.transpose() * u;
    const Scalar su = sum_.dot(u);
    Scalar ratio(0);
    for (int i = 0; i <= n_; ++i)
      if (products_(i) > Scalar(kUpperFacetThreshold)) ratio += term(i, products_(i), su, u);
    return ratio;
  }

  UpperSide<Scalar> upper_side(const Vector<Scalar>& u) const {
    check(u);
    UpperSide<Scalar> side;
    side.direction = u;
    const Vector<Scalar> products = normals_.transpose() * u;
    for (int i = 0; i <= n_; ++i)
      if (products(i) > Scalar(kUpperFacetThreshold)) side.facet_indices.push_back(i);
    return side;
  }

  RatioBreakdown<Scalar> breakdown(const Vector<Scalar>& u) const {
    RatioBreakdown<Scalar> out;
    out.upper_side = upper_side(u);
    const Scalar su = sum_.dot(u);
    for (int i : out.upper_side.facet_indices) {
      const Scalar t = term(i, normals_.col(i).dot(u), su, u);
      out.per_facet_terms.push_back(t);
      out.denominators.push_back(denominators_(i));
      out.ratio += t;
    }
    return out;
  }

 private:
  void check(const Vector<Scalar>& u) const {
    if (!is_unit(u)) throw InputError("reflection direction must be a unit vector of dimension n");
    if (!admissible(u))
      throw InadmissibleDirection("a vertex lies strictly below the reflecting hyperplane");
  }

  // 2n <u_i,u> <u, s - s_i> / |<u_i, (n+1) s_i - s>|
  Scalar term(int i, Scalar normal_dot_u, Scalar sum_dot_u, const Vector<Scalar>& u) const {
    const Scalar lift = sum_dot_u - vertices_.col(i).dot(u);
    return Scalar(2 * n_) * normal_dot_u * lift / denominators_(i);
  }

  int n_;
  Matrix<Scalar> vertices_;
  Matrix<Scalar> normals_;
  Vector<Scalar> sum_;
  Vector<Scalar> denominators_;
  mutable Vector<Scalar> products_;
  Scalar slack_{};
};

template <typename Scalar>
UpperSide<Scalar> upper_facets(const Simplex<Scalar>& s, const Vector<Scalar>& u) {
  return ReflectionRatio<Scalar>(s).upper_side(u);
}

/// Vol(conv(S u S^H)) / Vol(S) by the upper-side facet sum.
template <typename Scalar>
RatioBreakdown<Scalar> reflection_hull_ratio(const Simplex<Scalar>& s, const Vector<Scalar>& u) {
  return ReflectionRatio<Scalar>(s).breakdown(u);
}

/// Upper bound 2 * max_{i!=j}(|s_i|/m_j) * sum_l c_l, where c_l counts the
/// nonzero vertices off facet i_l: n - 1 for i_l != 0 and n for i_l = 0.
/// Equals 2k(n-1) max(|s_i|/m_j) whenever facet 0 is not on the upper side.
template <typename Scalar>
Scalar facet_count_bound(const Simplex<Scalar>& s, const UpperSide<Scalar>& upper) {
  const int n = s.dimension();
  int terms = 0;
  for (int i : upper.facet_indices) terms += (i == 0) ? n : n - 1;
  return Scalar(2 * terms) * min_height_ratio(s);
}

/// 2k(n-1) max(|s_i|/m_j) taken literally. Not a valid bound when facet 0 is
/// upper (the regular simplex at u = s/|s| violates it for n <= 4).
template <typename Scalar>
Scalar facet_count_bound_uncorrected(const Simplex<Scalar>& s, const UpperSide<Scalar>& upper) {
  const int n = s.dimension();
  return Scalar(2 * upper.count() * (n - 1)) * min_height_ratio(s);
}

template <typename Scalar>
struct SingleFacetBound {
  Scalar bound{};                ///< n (1 + |s| / <u_0, s>)
  Vector<Scalar> optimal_u;      ///< (u_0 + s') / |u_0 + s'|, s' = s / |s|
  Scalar gram_form{};            ///< n + sqrt(1^T G^-1 1) |M 1|
  Scalar gram_form_l1{};         ///< n + sqrt(|1^T G^-1|_1) |M 1|
  Scalar u0_dot_s{};             ///< <u_0, s> from the facet normal
  Scalar u0_dot_s_from_gram{};   ///< n / sqrt(1^T G^-1 1)
  bool gram_weights_nonnegative = false;  ///< 1^T G^-1 >= 0 (altitude foot from s_0 inside F_0)
};

/// Bound on the mirror-hull ratio over directions whose only upper facet is
/// F_0, together with its maximizer and the Gram-matrix form of the bound.
template <typename Scalar>
SingleFacetBound<Scalar> single_facet_bound(const Simplex<Scalar>& s) {
  using std::sqrt;
  const int n = s.dimension();
  const Vector<Scalar>& sum = s.vertex_sum();
  const Vector<Scalar>& u0 = s.facet(0).unit_outward_normal;

  SingleFacetBound<Scalar> out;
  out.u0_dot_s = u0.dot(sum);
  if (!(out.u0_dot_s > Scalar(0))) throw DegenerateSimplex("single_facet_bound: <u0, s> must be positive");
  const Scalar sum_norm = sum.norm();
  out.bound = Scalar(n) * (Scalar(1) + sum_norm / out.u0_dot_s);

  const Vector<Scalar> mid = u0 + sum / sum_norm;
  out.optimal_u = mid / mid.norm();

  const Matrix<Scalar> m = s.edge_matrix();
  const Matrix<Scalar> g_inv = matrix_inverse(gram_matrix(m));
  const Vector<Scalar> weights = g_inv.colwise().sum().transpose();
  const Scalar signed_sum = weights.sum();
  const Scalar l1 = weights.cwiseAbs().sum();
  const Scalar m_ones = (m * Vector<Scalar>::Ones(n)).norm();
  out.gram_form = Scalar(n) + sqrt(signed_sum) * m_ones;
  out.gram_form_l1 = Scalar(n) + sqrt(l1) * m_ones;
  out.u0_dot_s_from_gram = Scalar(n) / sqrt(signed_sum);
  out.gram_weights_nonnegative = (weights.array() >= Scalar(0)).all();
  return out;
}

/// Upper bound on <u_0, u>^2 for a regular n-simplex when k >= 2 facets are upper.
template <typename Scalar = double>
Scalar regular_k_bound(int n, int k) {
  const Scalar a = Scalar((n + 1) * (n - k + 1));
  return a / (Scalar(k - 1) + a);
}

template <typename Scalar>
struct RegularConstraintReport {
  Scalar u0_dot_u{};
  bool lower_range_ok = false;  ///< <u_0,u> >= 1/n
  bool upper_range_ok = false;  ///< <u_0,u> <= sqrt(1 - 1/n^2), only enforced for k >= 2
  bool k_bound_ok = false;      ///< <u_0,u>^2 <= regular_k_bound(n,k), only enforced for k >= 2

  bool ok() const noexcept { return lower_range_ok && upper_range_ok && k_bound_ok; }
};

/// Checks the constraints a direction u with k upper facets must satisfy on
/// regular_simplex(n). Requires 1 <= k <= n.
template <typename Scalar>
RegularConstraintReport<Scalar> regular_constraint_report(int n, int k, const Vector<Scalar>& u) {
  using std::sqrt;
  if (n < 2 || n > kMaxDimension) throw InputError("regular_constraint_check: n out of range");
  if (k < 1 || k > n) throw InputError("regular_constraint_check: k must be in 1..n");
  if (u.size() != n) throw InputError("regular_constraint_check: dimension mismatch");
  const Simplex<Scalar> reg = regular_simplex<Scalar>(n);
  const Vector<Scalar> u0 = reg.vertex_sum().normalized();
  const Scalar slack(1e-9);

  RegularConstraintReport<Scalar> r;
  r.u0_dot_u = u0.dot(u);
  r.lower_range_ok = r.u0_dot_u >= Scalar(1) / Scalar(n) - slack;
  if (k == 1) {
    r.upper_range_ok = true;
    r.k_bound_ok = true;
  } else {
    r.upper_range_ok = r.u0_dot_u <= sqrt(Scalar(1) - Scalar(1) / Scalar(n * n)) + slack;
    r.k_bound_ok = r.u0_dot_u * r.u0_dot_u <= regular_k_bound<Scalar>(n, k) + slack;
  }
  return r;
}

template <typename Scalar>
bool regular_constraint_check(int n, int k, const Vector<Scalar>& u) {
  return regular_constraint_report(n, k, u).ok();
}

/// Volume of conv(F u F^x) for an (n-1)-simplex F and its point reflection
/// lying in a parallel hyperplane at distance d: (2^{n-1}/n) Vol(F) d.
template <typename Scalar>
Scalar prism_decomposition_volume(Scalar facet_volume, Scalar d, int n) {
  if (n < 1) throw InputError("prism_decomposition_volume: n must be positive");
  if (!(facet_volume > Scalar(0)) || !(d > Scalar(0)))
    throw InputError("prism_decomposition_volume: facet volume and distance must be positive");
  return Scalar(std::ldexp(1.0, n - 1)) / Scalar(n) * facet_volume * d;
}

enum class PointReflectionCase {
  kParallelFacets = 1,  ///< S_0^x inside S: hull = conv(F_0 u F_0^x)
  kWithCaps = 2,        ///< S_0^x beyond aff F_0: two pyramids added
};

template <typename Scalar>
struct PointReflectionClosedForm {
  Scalar volume{};
  int apex = 0;  ///< vertex playing the role of S_0
  PointReflectionCase kind = PointReflectionCase::kParallelFacets;
  Scalar d{};    ///< distance between aff F_0 and aff F_0^x
  Scalar c{};    ///< distance of S_0^x beyond aff F_0 (0 in the first case)
};

/// Vol(conv(S u (2x - S))) for x in S (canonical frame) by the prism/pyramid
/// decomposition around some apex vertex.
///
/// The first case holds for any x once 2x - S_0 lies in S. The second case
/// additionally needs the hull's slice at aff F_0 to be F_0 itself, which in
/// barycentric terms is min_j lambda_j / t >= a / (1 + a) with t = 1 - lambda_0
/// and a = 2t - 1. Returns nothing when no apex satisfies either condition.
template <typename Scalar>
std::optional<PointReflectionClosedForm<Scalar>> point_reflection_closed_form(
    const Simplex<Scalar>& s, const Vector<Scalar>& x) {
  const int n = s.dimension();
  const Vector<Scalar> lambda = s.barycentric(x);
  if (lambda.minCoeff() < Scalar(-1e-12)) throw InputError("point reflection center lies outside S");
  const Scalar tol(1e-12);

  auto make = [&](int apex, PointReflectionCase kind) {
    const auto& f = s.facet(apex);
    PointReflectionClosedForm<Scalar> out;
    out.apex = apex;
    out.kind = kind;
    out.d = Scalar(2) * lambda(apex) * f.height;
    const Scalar scale = Scalar(std::ldexp(1.0, n - 1)) / Scalar(n) * f.facet_volume;
    if (kind == PointReflectionCase::kParallelFacets) {
      out.c = Scalar(0);
      out.volume = scale * out.d;
    } else {
      out.c = f.height - out.d;
      out.volume = scale * (out.d + Scalar(std::ldexp(1.0, -(n - 2))) * out.c);
    }
    return out;
  };

  for (int apex = 0; apex <= n; ++apex) {
    const Scalar height = s.facet(apex).height;
    const Scalar c = height - Scalar(2) * lambda(apex) * height;
    if (c <= tol * height) return make(apex, PointReflectionCase::kParallelFacets);
  }
  for (int apex = 0; apex <= n; ++apex) {
    const Scalar t = Scalar(1) - lambda(apex);
    const Scalar a = Scalar(2) * t - Scalar(1);
    Scalar min_weight = Scalar(1);
    for (int j = 0; j <= n; ++j)
      if (j != apex) min_weight = std::min<Scalar>(min_weight, lambda(j) / t);
    if (min_weight >= a / (Scalar(1) + a) - tol) return make(apex, PointReflectionCase::kWithCaps);
  }
  return std::nullopt;
}

}  // namespace simplexhull
