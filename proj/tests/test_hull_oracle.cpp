#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "simplexhull/errors.hpp"
#include "simplexhull/hull_oracle.hpp"
#include "simplexhull/lp.hpp"
#include "simplexhull/sampling.hpp"
#include "support.hpp"

using namespace simplexhull;

namespace {

Matrixd cube_corners(int n) {
  Matrixd m(n, 1 << n);
  for (int j = 0; j < (1 << n); ++j)
    for (int i = 0; i < n; ++i) m(i, j) = (j >> i) & 1;
  return m;
}

Matrixd right_simplex_vertices(int n) {
  Matrixd v = Matrixd::Zero(n, n + 1);
  v.rightCols(n) = Matrixd::Identity(n, n);
  return v;
}

}  // namespace

TEST_CASE("hull of simplex vertices and of cube corners") {
  CHECK(hull_volume(right_simplex_vertices(3), 3).volume == doctest::Approx(1.0 / 6).epsilon(1e-12));
  CHECK(hull_volume(right_simplex_vertices(4), 4).volume == doctest::Approx(1.0 / 24).epsilon(1e-12));
  const HullResult cube = hull_volume(cube_corners(3), 3);
  CHECK(cube.volume == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cube.facets.size() == 6);
  CHECK(cube.vertex_indices.size() == 8);
  CHECK(hull_volume(cube_corners(5), 5).volume == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cross-polytope volume 2^n/n!") {
  for (int n = 2; n <= 5; ++n) {
    Matrixd pts(n, 2 * n);
    pts << Matrixd::Identity(n, n), -Matrixd::Identity(n, n);
    CHECK(support::rel(hull_volume(pts, n).volume, std::pow(2.0, n) / factorial(n)) < 1e-12);
  }
}

TEST_CASE("hull of simplex vertices equals the simplex volume") {
  Rng rng = make_rng(31);
  for (int n = 2; n <= 7; ++n) {
    const Simplexd s = random_simplex(n, rng);
    CHECK(support::rel(hull_volume(s.vertices(), n).volume, s.volume()) < 1e-10);
  }
}

TEST_CASE("planar hulls agree with monotone chain and shoelace") {
  Rng rng = make_rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrixd pts = support::random_matrix(2, 5 + trial % 10, rng);
    CHECK(support::rel(hull_volume(pts, 2).volume, support::planar_hull_area(pts)) < 1e-10);
  }
}

TEST_CASE("vertex-sharing translate gives (n+1) times the simplex volume") {
  Rng rng = make_rng(33);
  for (int n = 2; n <= 5; ++n) {
    const Simplexd s = random_simplex(n, rng);
    const Vectord shift = s.vertex(1) - s.vertex(2);
    const Matrixd moved = s.vertices().colwise() + shift;
    CHECK(support::rel(union_hull_volume(s.vertices(), moved), (n + 1) * s.volume()) < 1e-8);
  }
}

TEST_CASE("adding a point never decreases the volume") {
  Rng rng = make_rng(34);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const Matrixd pts = support::random_matrix(n, n + 4, rng);
      double previous = hull_volume(pts.leftCols(n + 1), n).volume;
      for (int m = n + 2; m <= n + 4; ++m) {
        const double v = hull_volume(Matrixd(pts.leftCols(m)), n).volume;
        CHECK(v >= previous * (1 - 1e-10));
        previous = v;
      }
    }
}

TEST_CASE("volume is invariant under translations and reflections") {
  Rng rng = make_rng(35);
  for (int n = 2; n <= 5; ++n) {
    const Matrixd pts = support::random_matrix(n, 2 * n + 2, rng);
    const double base = hull_volume(pts, n).volume;
    const Vectord c = support::random_matrix(n, 1, rng).col(0);
    const Vectord u = random_unit_vector(n, rng);
    for (const Isometryd& iso :
         {Isometryd(Translation<double>{c}), Isometryd(PointReflection<double>{c}),
          Isometryd(HyperplaneReflection<double>(u))})
      CHECK(support::rel(hull_volume(apply_isometry(iso, pts), n).volume, base) < 1e-9);
  }
}

TEST_CASE("facet pyramids from two different interior points sum to the same volume") {
  Rng rng = make_rng(36);
  for (int n = 2; n <= 5; ++n) {
    const Matrixd pts = support::random_matrix(n, 2 * n + 2, rng);
    const HullResult h = hull_volume(pts, n);
    const Vectord a = h.interior_point;
    const Vectord b = pts.rowwise().mean();
    REQUIRE(hull_contains(h, b));
    CHECK(support::rel(pyramid_volume_from(h, a), h.volume) < 1e-9);
    CHECK(support::rel(pyramid_volume_from(h, b), h.volume) < 1e-9);
  }
}

TEST_CASE("hull containment") {
  Rng rng = make_rng(37);
  const Matrixd pts = support::random_matrix(3, 9, rng);
  const HullResult h = hull_volume(pts, 3);
  CHECK(hull_contains(h, h.interior_point));
  Vectord centroid = pts.rowwise().mean();
  Eigen::Index far = 0;
  (pts.colwise() - centroid).colwise().norm().maxCoeff(&far);
  CHECK_FALSE(hull_contains(h, Vectord(centroid + 2.0 * (pts.col(far) - centroid))));
  for (int j = 0; j < pts.cols(); ++j) CHECK(hull_contains(h, pts.col(j)));
}

TEST_CASE("facets are outward, tight and sorted") {
  Rng rng = make_rng(38);
  const Matrixd pts = support::random_matrix(4, 10, rng);
  const HullResult h = hull_volume(pts, 4);
  for (const auto& f : h.facets) {
    CHECK(std::abs(f.normal.norm() - 1) < 1e-12);
    CHECK(f.members.size() >= 4);
    CHECK((f.normal.transpose() * pts).maxCoeff() <= f.offset + h.tolerance);
    CHECK(f.normal.dot(h.interior_point) < f.offset);
  }
  CHECK(std::is_sorted(h.facets.begin(), h.facets.end(), [](const HullFacet& a, const HullFacet& b) {
    return std::lexicographical_compare(a.normal.begin(), a.normal.end(), b.normal.begin(), b.normal.end());
  }));
}

TEST_CASE("coplanar and duplicated points are handled") {
  // Cube with face centres and a repeated corner.
  Matrixd pts(3, 11);
  pts << cube_corners(3), Vectord::Constant(3, 0.5), Vectord::Constant(3, 0.0), (Vectord(3) << 0.5, 0.5, 1).finished();
  const HullResult h = hull_volume(pts, 3);
  CHECK(h.volume == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(h.facets.size() == 6);
  CHECK(h.vertex_indices.size() == 8);
}

TEST_CASE("oracle input errors") {
  Matrixd flat(3, 4);
  flat << 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0;
  CHECK_THROWS_AS(hull_volume(flat, 3), DegenerateHull);
  try {
    hull_volume(flat, 3);
  } catch (const DegenerateHull& e) {
    CHECK(e.rank() == 2);
  }
  CHECK_THROWS_AS(hull_volume(Matrixd::Zero(3, 3), 3), InputError);
  CHECK_THROWS_AS(hull_volume(Matrixd::Zero(8, 20), 8), InputError);
  CHECK_THROWS_AS(hull_volume(Matrixd::Zero(2, 65), 2), InputError);
  CHECK_THROWS_AS(hull_volume(Matrixd::Zero(3, 5), 2), InputError);
}

TEST_CASE("linear program optimum, infeasibility and unboundedness") {
  // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6  -> x = 1.6, y = 1.2
  Matrixd a(2, 4);
  a << 1, 2, 1, 0, 3, 1, 0, 1;
  Vectord b(2);
  b << 4, 6;
  Vectord c(4);
  c << -1, -1, 0, 0;
  const auto sol = lp::minimize(a, b, c);
  REQUIRE(sol.status == lp::Status::kOptimal);
  CHECK(sol.x(0) == doctest::Approx(1.6).epsilon(1e-12));
  CHECK(sol.x(1) == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(sol.objective == doctest::Approx(-2.8).epsilon(1e-12));

  Matrixd inf(2, 1);
  inf << 1, 1;
  Vectord rhs(2);
  rhs << 1, 2;
  CHECK(lp::minimize(inf, rhs, Vectord::Zero(1)).status == lp::Status::kInfeasible);

  Matrixd unb(1, 2);
  unb << 1, -1;
  Vectord one(1);
  one << 1;
  Vectord cost(2);
  cost << -1, 0;
  CHECK(lp::minimize(unb, one, cost).status == lp::Status::kUnbounded);
}

TEST_CASE("simplex intersection by linear programming") {
  Rng rng = make_rng(39);
  for (int n = 2; n <= 6; ++n) {
    const Simplexd s = random_simplex(n, rng);
    const Matrixd v = s.world_vertices();
    double diameter = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) diameter = std::max(diameter, (v.col(i) - v.col(j)).norm());
    const Vectord far = 3.0 * diameter * random_unit_vector(n, rng);
    CHECK_FALSE(intersects(v, Matrixd(v.colwise() + far)));
    CHECK(intersects(s, s));
    // Point reflection through vertex 0 meets S only there.
    const Matrixd reflected = apply_isometry<double>(PointReflection<double>{v.col(0)}, v);
    CHECK(intersects(v, reflected));
  }
  Matrixd flat(2, 3);
  flat << 0, 1, 2, 0, 1, 2;
  CHECK_THROWS_AS(intersects(flat, flat), DegenerateSimplex);
}
