#pragma once

// Verification suites: each function samples its own configurations from the
// seed and returns one verdict per dimension and property. Verdict groups:
//   1 translation maximum            6 convexity along a translation line
//   2 point reflection maximum       7 single-vertex contact at optima
//   3 facet formula vs hull oracle   8 facet-count bound dominance
//   4 regular hyperplane maximum     9 regular-simplex direction constraints
//   5 single-upper-facet bound

#include <cstdint>
#include <vector>

#include "simplexhull/report.hpp"

namespace simplexhull {

struct CheckOptions {
  std::vector<int> dims{2, 3, 4, 5};
  std::uint64_t seed = 0;
  double scale = 1.0;  ///< multiplies every sample count (each count stays >= 1)

  int count(int base) const;
};

/// Vertex-contact translations reach n+1; random boundary contacts do not
/// exceed it. 20 simplices per n. Groups 1 and 7.
std::vector<Verdict> check_translations(const CheckOptions& opt);

/// Vertex centers give 2^n; 100 interior centers per simplex give less; the
/// closed form agrees with the oracle wherever it applies. 10 simplices per n.
/// Groups 2 and 7.
std::vector<Verdict> check_point_reflections(const CheckOptions& opt);

/// 200 (simplex, admissible u) pairs per n: facet formula vs oracle, and the
/// facet-count bound against the formula. Groups 3 and 8.
std::vector<Verdict> check_hyperplane_formula(const CheckOptions& opt);

/// Search on the regular simplex plus 10^4 sampled admissible directions, and
/// the k >= 2 constraints on those samples. Groups 4, 7 and 9.
std::vector<Verdict> check_regular_hyperplane(const CheckOptions& opt);

/// Gram form of the single-upper-facet bound, its value 2n on the regular
/// simplex, and attainment at the optimal direction. 100 simplices per n. Group 5.
std::vector<Verdict> check_single_facet_bound(const CheckOptions& opt);

/// 50 (K, K', t) triples per n, 21 samples each; n > 4 is skipped. Group 6.
std::vector<Verdict> check_convexity(const CheckOptions& opt);

struct VerifyOptions {
  int n_min = 2;
  int n_max = 4;
  std::uint64_t seed = 0;
  int samples = 200;  ///< facet-formula pairs per n; other counts scale by samples / 200

  /// Throws InputError unless 2 <= n_min <= n_max <= 6 and samples >= 1.
  void validate() const;
};

/// All suites above, in group order.
RunReport verify_theorems(const VerifyOptions& options);

}  // namespace simplexhull
