#include "simplexhull/sampling.hpp"

#include <algorithm>

namespace simplexhull {

Vectord random_unit_vector(int n, Rng& rng) {
  std::normal_distribution<double> normal;
  Vectord v(n);
  do {
    for (int i = 0; i < n; ++i) v(i) = normal(rng);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Simplexd random_simplex(int n, Rng& rng, double min_aspect) {
  std::normal_distribution<double> normal;
  for (;;) {
    Matrixd v(n, n + 1);
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < n; ++i) v(i, j) = normal(rng);
    double diameter = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) diameter = std::max(diameter, (v.col(i) - v.col(j)).norm());
    try {
      Simplexd s(v);
      const bool thick = std::all_of(s.facets().begin(), s.facets().end(), [&](const FacetDatad& f) {
        return f.height >= min_aspect * diameter;
      });
      if (thick) return Simplexd(Matrixd(s.vertices()));
    } catch (const DegenerateSimplex&) {
    }
  }
}

Vectord random_interior_point(const Simplexd& s, Rng& rng) {
  std::exponential_distribution<double> expo;
  const int n = s.dimension();
  Vectord w(n + 1);
  for (int i = 0; i <= n; ++i) w(i) = expo(rng);
  w /= w.sum();
  return s.vertices() * w;
}

Vectord random_admissible_direction(const Simplexd& s, Rng& rng, double boundary_probability) {
  std::exponential_distribution<double> expo;
  std::uniform_real_distribution<double> unit;
  const int n = s.dimension();
  const Matrixd m = s.edge_matrix();
  Vectord w(n);
  do {
    for (int i = 0; i < n; ++i) {
      const double draw = expo(rng);
      w(i) = unit(rng) < boundary_probability ? 0.0 : draw;
    }
  } while (w.maxCoeff() <= 0.0);
  const Vectord u = m.transpose().fullPivLu().solve(w);
  return u.normalized();
}

}  // namespace simplexhull
