#include <doctest.h>

#include <cmath>

#include "simplexhull/errors.hpp"
#include "simplexhull/sampling.hpp"
#include "simplexhull/simplex.hpp"
#include "support.hpp"

using namespace simplexhull;

namespace {

Simplexd right_simplex(int n) {
  Matrixd v = Matrixd::Zero(n, n + 1);
  v.rightCols(n) = Matrixd::Identity(n, n);
  return Simplexd(v);
}

}  // namespace

TEST_CASE("unit right simplex volume") {
  CHECK(right_simplex(3).volume() == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(right_simplex(4).volume() == doctest::Approx(1.0 / 24).epsilon(1e-15));
}

TEST_CASE("regular triangle volume equals sqrt(det G)/2") {
  CHECK(regular_simplex(2).volume() == doctest::Approx(std::sqrt(0.75) / 2).epsilon(1e-14));
}

TEST_CASE("volume is homogeneous of degree n and invariant under isometries") {
  Rng rng = make_rng(21);
  for (int n = 2; n <= 6; ++n) {
    const Simplexd s = random_simplex(n, rng);
    for (double c : {0.1, 3.0}) {
      const Simplexd scaled(Matrixd(c * s.world_vertices()));
      CHECK(support::rel(scaled.volume(), std::pow(c, n) * s.volume()) < 1e-10);
    }
    const Vectord u = random_unit_vector(n, rng);
    const Simplexd mirrored(apply_isometry<double>(HyperplaneReflection<double>(u), s.world_vertices()));
    CHECK(support::rel(mirrored.volume(), s.volume()) < 1e-12);
  }
}

TEST_CASE("volume matches the Gram determinant of the edges") {
  Rng rng = make_rng(22);
  for (int n = 1; n <= 7; ++n) {
    const Simplexd s = random_simplex(n, rng);
    CHECK(support::rel(s.volume(), support::gram_volume(s.edge_matrix())) < 1e-10);
  }
}

TEST_CASE("degenerate and malformed simplices are rejected") {
  Matrixd flat(2, 3);
  flat << 0, 1, 2, 0, 1, 2;
  CHECK_THROWS_AS(Simplexd{flat}, DegenerateSimplex);
  CHECK_THROWS_AS(Simplexd{Matrixd::Zero(2, 2)}, InputError);
  Matrixd bad = Matrixd::Identity(2, 3);
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(Simplexd{bad}, InputError);
  CHECK_THROWS_AS(regular_simplex(9), InputError);
  CHECK_THROWS_AS(regular_simplex(1), InputError);
}

TEST_CASE("canonical frame puts vertex 0 at the origin") {
  Matrixd v(2, 3);
  v << 5, 6, 5, 7, 7, 8;
  const Simplexd s(v);
  CHECK(s.vertex(0).norm() == 0.0);
  CHECK(s.anchor()(0) == 5.0);
  CHECK(s.world_vertices().isApprox(v));
}

TEST_CASE("facet opposite the origin of the right triangle has normal (1,1)/sqrt(2)") {
  const Simplexd s = right_simplex(2);
  const auto& f = s.facet(0);
  CHECK(f.unit_outward_normal(0) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(f.unit_outward_normal(1) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(f.height == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(f.facet_volume == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("regular simplex facet opposite the origin has normal s/|s|") {
  for (int n = 2; n <= 8; ++n) {
    const Simplexd s = regular_simplex(n);
    CHECK((s.facet(0).unit_outward_normal - s.vertex_sum().normalized()).norm() < 1e-12);
  }
}

TEST_CASE("facet data: unit outward normals, centroids, and volume = facet volume * height / n") {
  Rng rng = make_rng(23);
  for (int n = 2; n <= 7; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const Simplexd s = random_simplex(n, rng);
      const auto& facets = facet_data(s);
      REQUIRE(facets.size() == static_cast<std::size_t>(n + 1));
      for (int i = 0; i <= n; ++i) {
        const auto& f = facets[static_cast<std::size_t>(i)];
        CHECK(f.opposite_vertex_index == i);
        CHECK(std::abs(f.unit_outward_normal.norm() - 1) < 1e-12);
        CHECK(f.unit_outward_normal.dot(s.vertex(i) - f.centroid) < 0);
        CHECK(f.height > 0);
        CHECK(support::rel(f.facet_volume * f.height / n, s.volume()) < 1e-10);

        // Independent route: facet edges, their Gram volume, and the normal
        // as the kernel of the edge matrix transposed.
        std::vector<int> others;
        for (int j = 0; j <= n; ++j)
          if (j != i) others.push_back(j);
        Matrixd edges(n, n - 1);
        Vectord centroid = s.vertex(others[0]);
        for (int j = 1; j < n; ++j) {
          edges.col(j - 1) = s.vertex(others[j]) - s.vertex(others[0]);
          centroid += s.vertex(others[j]);
        }
        centroid /= n;
        CHECK((centroid - f.centroid).norm() < 1e-12 * (1 + centroid.norm()));
        CHECK(support::rel(f.facet_volume, support::gram_volume(edges)) < 1e-10);
        const Matrixd kernel = Eigen::FullPivLU<Matrixd>(edges.transpose()).kernel();
        REQUIRE(kernel.cols() == 1);
        CHECK(std::abs(std::abs(kernel.col(0).normalized().dot(f.unit_outward_normal)) - 1) < 1e-10);
      }
    }
}

TEST_CASE("vertex sum") {
  CHECK(vertex_sum(right_simplex(3)).isApprox(Vectord::Ones(3)));
  for (int n = 2; n <= 8; ++n) {
    const Vectord s = regular_simplex(n).vertex_sum();
    CHECK(s.squaredNorm() == doctest::Approx(n * (n + 1) / 2.0).epsilon(1e-12));
  }
  Rng rng = make_rng(24);
  const Simplexd s = random_simplex(4, rng);
  const Simplexd reflected(apply_isometry<double>(PointReflection<double>{Vectord::Zero(4)}, s.vertices()));
  CHECK((reflected.vertex_sum() + s.vertex_sum()).norm() < 1e-12);
}

TEST_CASE("regular simplex construction") {
  const Simplexd s2 = regular_simplex(2);
  const Matrixd g = gram_matrix(s2.edge_matrix());
  CHECK(g(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
  for (int n = 2; n <= 8; ++n) {
    const Simplexd s = regular_simplex(n);
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) CHECK(std::abs((s.vertex(i) - s.vertex(j)).norm() - 1.0) < 1e-12);
  }
  const double det_g = support::cofactor_determinant(gram_matrix(regular_simplex(3).edge_matrix()));
  CHECK(det_g == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(regular_simplex(3).volume() == doctest::Approx(std::sqrt(det_g) / 6).epsilon(1e-14));
}

TEST_CASE("height ratio of the regular triangle") {
  // |s_i| = 1 and every height of the unit equilateral triangle is sqrt(3)/2.
  CHECK(min_height_ratio(regular_simplex(2)) == doctest::Approx(2 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("height ratio is scale invariant and grows when the simplex is flattened") {
  Rng rng = make_rng(25);
  for (int n = 2; n <= 5; ++n) {
    const Simplexd s = random_simplex(n, rng);
    const Simplexd scaled(Matrixd(7.5 * s.world_vertices()));
    CHECK(support::rel(min_height_ratio(scaled), min_height_ratio(s)) < 1e-12);
  }
  // Move the apex of a right triangle toward its opposite side.
  Matrixd v(2, 3);
  v << 0, 1, 0, 0, 0, 1;
  const double before = min_height_ratio(Simplexd(v));
  v(1, 2) = 0.5;
  CHECK(min_height_ratio(Simplexd(v)) > before);
}

TEST_CASE("barycentric coordinates") {
  Rng rng = make_rng(26);
  const Simplexd s = random_simplex(4, rng);
  for (int i = 0; i <= 4; ++i) {
    const Vectord l = s.barycentric(s.vertex(i));
    for (int j = 0; j <= 4; ++j) CHECK(std::abs(l(j) - (i == j ? 1.0 : 0.0)) < 1e-12);
  }
  const Vectord centroid = s.vertices().rowwise().mean();
  CHECK((s.barycentric(centroid).array() - 0.2).abs().maxCoeff() < 1e-12);
}

TEST_CASE("rerooting moves the chosen vertex to the origin and keeps the shape") {
  Rng rng = make_rng(27);
  const Simplexd s = random_simplex(3, rng);
  for (int root = 0; root <= 3; ++root) {
    const Simplexd r = s.rerooted(root);
    const auto order = Simplexd::reroot_order(3, root);
    CHECK(order[0] == root);
    CHECK(support::rel(r.volume(), s.volume()) < 1e-12);
    for (int k = 0; k <= 3; ++k)
      CHECK((r.world_vertices().col(k) - s.world_vertices().col(order[static_cast<std::size_t>(k)])).norm() <
            1e-12);
  }
}

TEST_CASE("simplex and facet data instantiate for long double") {
  const Simplex<long double> s = regular_simplex<long double>(4);
  CHECK(std::abs(static_cast<double>(s.volume()) - regular_simplex(4).volume()) < 1e-15);
  CHECK(std::abs(static_cast<double>(s.facet(0).height * s.facet(0).facet_volume / 4 - s.volume())) < 1e-17);
}
