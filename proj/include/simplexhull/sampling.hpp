#pragma once

// Seeded random instances for property checks and searches. Each function
// takes the generator explicitly; there is no global RNG state.

#include <cstdint>
#include <random>

#include "simplexhull/simplex.hpp"

namespace simplexhull {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Vectord random_unit_vector(int n, Rng& rng);

/// Gaussian vertices, rejected until every height is at least `min_aspect`
/// times the diameter, then canonicalized.
Simplexd random_simplex(int n, Rng& rng, double min_aspect = 0.05);

/// Uniform point of S (canonical frame) via Dirichlet(1,...,1) weights.
Vectord random_interior_point(const Simplexd& s, Rng& rng);

/// Random unit u with <u, s_i> >= 0 for all i: u = M^{-T} w with w >= 0.
/// Each weight is zeroed with probability `boundary_probability` (never all),
/// which puts the corresponding vertex on the hyperplane.
Vectord random_admissible_direction(const Simplexd& s, Rng& rng, double boundary_probability = 0.0);

}  // namespace simplexhull
