#pragma once

// Numerical maximization of Vol(conv(S u sigma(S))) / Vol(S) over the three
// isometry families (translations, point reflections, hyperplane
// reflections), plus the convexity and contact probes used to check the
// structure of the maximizers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplexhull/geomcore.hpp"
#include "simplexhull/simplex.hpp"

namespace simplexhull {

enum class IsometryFamily { kTranslation, kPointReflection, kHyperplaneReflection };

const char* to_string(IsometryFamily family);
/// Accepts "translation", "point", "hyperplane".
IsometryFamily parse_family(const std::string& name);

struct SearchConfig {
  int coarse_grid_resolution = 12;  ///< grid points per sphere dimension
  int refinement_iterations = 40;
  double refinement_shrink = 0.7;   ///< neighbourhood radius factor per iteration
  std::uint64_t seed = 0;
  bool oracle_check = true;
  int refinement_starts = 3;        ///< best coarse points refined per root vertex
  int refinement_samples = 0;       ///< per start and iteration; 0 means 16n
  int random_probes = 100;          ///< interior / boundary-contact probes

  /// Throws InputError unless resolution >= 8, iterations >= 10 and shrink in (0,1).
  void validate() const;
};

/// Directions of the cube-face grid: 2n faces, each with res^(n-1) cell
/// centres, projected to the unit sphere.
long sphere_grid_size(int n, int res);
Vectord sphere_grid_direction(int n, int res, long index);

enum class ContactKind { kSingleCommonVertex, kSingleNonVertexPoint, kHigherDimensional };

const char* to_string(ContactKind kind);

/// Shape of S n sigma(S).
struct ContactCertificate {
  ContactKind kind = ContactKind::kHigherDimensional;
  int dimension = 0;                     ///< affine dimension of the intersection
  Vectord point;                         ///< the common point when dimension == 0
  std::optional<int> vertex_index;       ///< vertex of S at the point
  std::optional<int> image_vertex_index; ///< vertex of sigma(S) at the point, by preimage index

  std::string description() const;
};

struct TracePoint {
  int iteration = 0;
  double best_ratio = 0;
};

struct SearchResult {
  IsometryFamily family = IsometryFamily::kTranslation;
  /// u (unit normal), x (reflection center) or t (translation), in the
  /// canonical frame of the input simplex. For hyperplanes, H passes through
  /// vertex `root_vertex` with normal u.
  Vectord argmax_parameter;
  int root_vertex = 0;
  std::string candidate_label;  ///< which candidate won, e.g. "s_1 - s_0"
  double max_ratio = 0;
  std::optional<double> oracle_ratio;
  std::vector<TracePoint> trace;  ///< best ratio after each phase; non-decreasing
  ContactCertificate contact;
  std::optional<double> probe_max_ratio;  ///< best ratio among the random probes
  long evaluations = 0;
};

/// Coarse cube-face grid over the sphere, rejected to the admissible cap of
/// each root vertex, followed by shrinking-neighbourhood resampling around
/// the best grid points. Objective: the upper-side facet formula.
SearchResult maximize_hyperplane_reflection(const Simplexd& s, const SearchConfig& cfg);

/// Evaluates all vertices as reflection centers plus `random_probes`
/// uniformly sampled interior centers.
SearchResult maximize_point_reflection(const Simplexd& s, const SearchConfig& cfg);

/// Evaluates all vertex-to-vertex translations s_i - s_j plus
/// `random_probes` boundary-contact translations in random directions.
SearchResult maximize_translation(const Simplexd& s, const SearchConfig& cfg);

struct ConvexityReport {
  std::vector<double> xs;
  std::vector<double> values;  ///< g(x) = Vol(conv(K u (K2 + x t)))
  double min_second_difference = 0;
  double scale = 0;            ///< max |g|
  bool convex = false;         ///< min second difference >= -1e-7 * scale
};

/// Samples g at `samples` evenly spaced x in [-half_range, half_range]
/// (canonical frames of both simplices).
ConvexityReport convexity_probe(const Simplexd& k, const Simplexd& k2, const Vectord& t,
                                int samples, double half_range = 1.0);

/// Classifies S n sigma(S), with sigma acting on the canonical frame of s.
/// Throws NoContact when the intersection is empty.
ContactCertificate contact_certificate(const Simplexd& s, const Isometryd& sigma);

/// Largest lambda >= 0 with lambda d in S - S, i.e. the translation along d
/// at which S + lambda d just touches S.
double contact_translation_length(const Simplexd& s, const Vectord& d);

}  // namespace simplexhull
