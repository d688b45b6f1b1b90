#include "simplexhull/extremal_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "simplexhull/hull_oracle.hpp"
#include "simplexhull/lp.hpp"
#include "simplexhull/point_reflection.hpp"
#include "simplexhull/reflection.hpp"
#include "simplexhull/sampling.hpp"

namespace simplexhull {
namespace {

// A later candidate replaces the incumbent only when it is better by more
// than this relative margin, so ties go to the lower candidate index.
constexpr double kTieTolerance = 1e-9;

bool clearly_better(double candidate, double incumbent) {
  return candidate > incumbent + kTieTolerance * std::abs(incumbent);
}

// Streams of the seeded generator, one per search phase.
enum Stream : std::uint64_t { kRefineStream = 1, kPointStream = 2, kTranslationStream = 3 };

double affine_extent_rank(const Matrixd& pts, double tol, int& rank) {
  const Matrixd centered = pts.colwise() - pts.rowwise().mean();
  const Eigen::JacobiSVD<Matrixd> svd(centered);
  rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++rank;
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double translation_ratio(const Simplexd& s, const Vectord& t) {
  const Matrixd& v = s.vertices();
  const Matrixd moved = v.colwise() + t;
  return union_hull_volume(v, moved) / s.volume();
}

double hyperplane_oracle_ratio(const Simplexd& s, const Vectord& u) {
  const Matrixd& v = s.vertices();
  const Matrixd mirrored = v - 2.0 * u * (u.transpose() * v);
  return union_hull_volume(v, mirrored) / s.volume();
}

struct Start {
  int root = 0;
  Vectord u;
  double ratio = -1;
};

}  // namespace

// Direction number `index` of the cube-face grid: face = index / res^(n-1)
// picks axis face/2 with sign + for even faces; the remaining coordinates are
// cell centres of a res^(n-1) lattice on the face.
Vectord sphere_grid_direction(int n, int res, long index) {
  if (index < 0 || index >= sphere_grid_size(n, res)) throw InputError("sphere grid index out of range");
  long per_face = 1;
  for (int i = 0; i < n - 1; ++i) per_face *= res;
  const int face = static_cast<int>(index / per_face);
  long rest = index % per_face;
  const int axis = face / 2;
  Vectord v(n);
  v(axis) = (face % 2 == 0) ? 1.0 : -1.0;
  for (int i = 0; i < n; ++i) {
    if (i == axis) continue;
    const long j = rest % res;
    rest /= res;
    v(i) = -1.0 + (2.0 * static_cast<double>(j) + 1.0) / res;
  }
  return v.normalized();
}

long sphere_grid_size(int n, int res) {
  if (n < 1 || res < 1) throw InputError("sphere grid needs n >= 1 and res >= 1");
  long count = 2L * n;
  for (int i = 0; i < n - 1; ++i) count *= res;
  return count;
}

const char* to_string(IsometryFamily family) {
  switch (family) {
    case IsometryFamily::kTranslation:
      return "translation";
    case IsometryFamily::kPointReflection:
      return "point";
    case IsometryFamily::kHyperplaneReflection:
      return "hyperplane";
  }
  return "unknown";
}

IsometryFamily parse_family(const std::string& name) {
  if (name == "translation") return IsometryFamily::kTranslation;
  if (name == "point") return IsometryFamily::kPointReflection;
  if (name == "hyperplane") return IsometryFamily::kHyperplaneReflection;
  throw InputError("unknown isometry family '" + name + "'");
}

const char* to_string(ContactKind kind) {
  switch (kind) {
    case ContactKind::kSingleCommonVertex:
      return "single common vertex";
    case ContactKind::kSingleNonVertexPoint:
      return "single non-vertex point";
    case ContactKind::kHigherDimensional:
      return "higher-dimensional intersection";
  }
  return "unknown";
}

std::string ContactCertificate::description() const {
  std::ostringstream os;
  os << to_string(kind);
  if (kind == ContactKind::kSingleCommonVertex) {
    os << " (index " << *vertex_index << ")";
  } else if (kind == ContactKind::kHigherDimensional) {
    os << " (dimension " << dimension << ")";
  }
  return os.str();
}

void SearchConfig::validate() const {
  if (coarse_grid_resolution < 8) throw InputError("SearchConfig: coarse_grid_resolution must be >= 8");
  if (refinement_iterations < 10) throw InputError("SearchConfig: refinement_iterations must be >= 10");
  if (!(refinement_shrink > 0.0 && refinement_shrink < 1.0))
    throw InputError("SearchConfig: refinement_shrink must lie in (0,1)");
  if (refinement_starts < 1) throw InputError("SearchConfig: refinement_starts must be positive");
  if (refinement_samples < 0 || random_probes < 0)
    throw InputError("SearchConfig: sample counts must be non-negative");
}

ContactCertificate contact_certificate(const Simplexd& s, const Isometryd& sigma) {
  const int n = s.dimension();
  const Matrixd& v = s.vertices();
  const Matrixd w = apply_isometry(sigma, v);
  if (!intersects(v, w)) throw NoContact("S and sigma(S) do not intersect");

  Matrixd lhs = Matrixd::Zero(n + 2, 2 * (n + 1));
  lhs.topLeftCorner(n, n + 1) = v;
  lhs.topRightCorner(n, n + 1) = -w;
  lhs.row(n).head(n + 1).setOnes();
  lhs.row(n + 1).tail(n + 1).setOnes();
  Vectord rhs = Vectord::Zero(n + 2);
  rhs(n) = rhs(n + 1) = 1.0;

  // Extreme common points along +-e_k and +-(1,...,1).
  std::vector<Vectord> directions;
  for (int k = 0; k < n; ++k) {
    directions.push_back(Vectord::Unit(n, k));
    directions.push_back(-Vectord::Unit(n, k));
  }
  directions.push_back(Vectord::Ones(n).normalized());
  directions.push_back(-Vectord::Ones(n).normalized());

  const double scale = std::max({1.0, v.cwiseAbs().maxCoeff(), w.cwiseAbs().maxCoeff()});
  const double tol = 1e-9 * scale;
  Matrixd points(n, static_cast<Eigen::Index>(directions.size()));
  for (std::size_t k = 0; k < directions.size(); ++k) {
    Vectord cost = Vectord::Zero(2 * (n + 1));
    cost.head(n + 1) = -(v.transpose() * directions[k]);
    const auto sol = lp::minimize(lhs, rhs, cost, tol);
    if (sol.status != lp::Status::kOptimal) throw NoContact("intersection probe failed");
    points.col(static_cast<Eigen::Index>(k)) = v * sol.x.head(n + 1);
  }

  ContactCertificate cert;
  affine_extent_rank(points, tol, cert.dimension);
  if (cert.dimension > 0) {
    cert.kind = ContactKind::kHigherDimensional;
    return cert;
  }
  cert.point = points.rowwise().mean();
  for (int i = 0; i <= n; ++i) {
    if (!cert.vertex_index && (v.col(i) - cert.point).norm() <= tol) cert.vertex_index = i;
    if (!cert.image_vertex_index && (w.col(i) - cert.point).norm() <= tol) cert.image_vertex_index = i;
  }
  cert.kind = (cert.vertex_index && cert.image_vertex_index) ? ContactKind::kSingleCommonVertex
                                                             : ContactKind::kSingleNonVertexPoint;
  return cert;
}

double contact_translation_length(const Simplexd& s, const Vectord& d) {
  const int n = s.dimension();
  if (d.size() != n || !(d.norm() > 0)) throw InputError("contact_translation_length: bad direction");
  const Matrixd& v = s.vertices();
  // Variables (alpha, beta, lambda) >= 0: V alpha - V beta - lambda d = 0.
  Matrixd lhs = Matrixd::Zero(n + 2, 2 * (n + 1) + 1);
  lhs.topLeftCorner(n, n + 1) = v;
  lhs.block(0, n + 1, n, n + 1) = -v;
  lhs.col(2 * (n + 1)).head(n) = -d;
  lhs.row(n).head(n + 1).setOnes();
  lhs.row(n + 1).segment(n + 1, n + 1).setOnes();
  Vectord rhs = Vectord::Zero(n + 2);
  rhs(n) = rhs(n + 1) = 1.0;
  Vectord cost = Vectord::Zero(2 * (n + 1) + 1);
  cost(2 * (n + 1)) = -1.0;
  const auto sol = lp::minimize(lhs, rhs, cost);
  if (sol.status != lp::Status::kOptimal) throw Error("contact_translation_length: LP failed");
  return sol.x(2 * (n + 1));
}

SearchResult maximize_hyperplane_reflection(const Simplexd& s, const SearchConfig& cfg) {
  cfg.validate();
  const int n = s.dimension();
  const int res = cfg.coarse_grid_resolution;
  const int samples = cfg.refinement_samples > 0 ? cfg.refinement_samples : 16 * n;

  SearchResult out;
  out.family = IsometryFamily::kHyperplaneReflection;

  std::vector<Simplexd> roots;
  std::vector<ReflectionRatio<double>> objectives;
  for (int r = 0; r <= n; ++r) {
    roots.push_back(s.rerooted(r));
    objectives.emplace_back(roots.back());
  }

  // Coarse phase: keep the best few admissible grid directions per root.
  std::vector<Start> starts;
  const long grid = sphere_grid_size(n, res);
  for (int r = 0; r <= n; ++r) {
    std::vector<Start> best;
    for (long g = 0; g < grid; ++g) {
      const Vectord u = sphere_grid_direction(n, res, g);
      const auto ratio = objectives[static_cast<std::size_t>(r)](u);
      ++out.evaluations;
      if (!ratio) continue;
      if (static_cast<int>(best.size()) == cfg.refinement_starts && *ratio <= best.back().ratio) continue;
      Start st{r, u, *ratio};
      auto pos = std::find_if(best.begin(), best.end(), [&](const Start& b) { return *ratio > b.ratio; });
      best.insert(pos, st);
      if (static_cast<int>(best.size()) > cfg.refinement_starts) best.pop_back();
    }
    starts.insert(starts.end(), best.begin(), best.end());
  }
  if (starts.empty()) throw Error("maximize_hyperplane_reflection: admissible region is empty");

  auto global_best = [&starts] {
    double b = -1;
    for (const auto& st : starts) b = std::max(b, st.ratio);
    return b;
  };
  out.trace.push_back({0, global_best()});

  // Refinement: best-of-N resampling in a shrinking spherical neighbourhood.
  Rng rng = make_rng(cfg.seed, kRefineStream);
  std::normal_distribution<double> normal;
  double radius = 2.0 / res;
  Vectord step(n);
  for (int it = 1; it <= cfg.refinement_iterations; ++it) {
    for (auto& st : starts) {
      const auto& objective = objectives[static_cast<std::size_t>(st.root)];
      Start local = st;
      for (int k = 0; k < samples; ++k) {
        for (int i = 0; i < n; ++i) step(i) = normal(rng);
        const Vectord u = (st.u + radius * step / std::sqrt(static_cast<double>(n))).normalized();
        const auto ratio = objective(u);
        ++out.evaluations;
        if (ratio && *ratio > local.ratio) local = Start{st.root, u, *ratio};
      }
      st = local;
    }
    out.trace.push_back({it, std::max(out.trace.back().best_ratio, global_best())});
    radius *= cfg.refinement_shrink;
  }

  std::size_t chosen = 0;
  for (std::size_t i = 1; i < starts.size(); ++i)
    if (clearly_better(starts[i].ratio, starts[chosen].ratio)) chosen = i;
  const Start& win = starts[chosen];
  const Simplexd& rooted = roots[static_cast<std::size_t>(win.root)];

  out.argmax_parameter = win.u;
  out.root_vertex = win.root;
  out.max_ratio = win.ratio;
  out.candidate_label = "root " + std::to_string(win.root) + " start " + std::to_string(chosen);
  if (cfg.oracle_check) out.oracle_ratio = hyperplane_oracle_ratio(rooted, win.u);

  out.contact = contact_certificate(rooted, HyperplaneReflection<double>(win.u));
  const auto order = Simplexd::reroot_order(n, win.root);
  if (out.contact.vertex_index) out.contact.vertex_index = order[static_cast<std::size_t>(*out.contact.vertex_index)];
  if (out.contact.image_vertex_index)
    out.contact.image_vertex_index = order[static_cast<std::size_t>(*out.contact.image_vertex_index)];
  if (out.contact.dimension == 0) out.contact.point += s.vertex(win.root);
  return out;
}

SearchResult maximize_point_reflection(const Simplexd& s, const SearchConfig& cfg) {
  cfg.validate();
  const int n = s.dimension();
  SearchResult out;
  out.family = IsometryFamily::kPointReflection;

  std::vector<Vectord> centers;
  for (int i = 0; i <= n; ++i) centers.push_back(s.vertex(i));
  Rng rng = make_rng(cfg.seed, kPointStream);
  for (int k = 0; k < cfg.random_probes; ++k) centers.push_back(random_interior_point(s, rng));

  std::size_t chosen = 0;
  double best = -1;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const double ratio = point_reflection_volume(s, centers[c]).volume / s.volume();
    ++out.evaluations;
    if (c > static_cast<std::size_t>(n))
      out.probe_max_ratio = std::max(out.probe_max_ratio.value_or(ratio), ratio);
    if (c == 0 || clearly_better(ratio, best)) {
      best = ratio;
      chosen = c;
    }
    out.trace.push_back({static_cast<int>(c), best});
  }

  out.argmax_parameter = centers[chosen];
  out.max_ratio = best;
  out.candidate_label = chosen <= static_cast<std::size_t>(n)
                            ? "vertex " + std::to_string(chosen)
                            : "probe " + std::to_string(chosen - static_cast<std::size_t>(n) - 1);
  if (chosen <= static_cast<std::size_t>(n)) out.root_vertex = static_cast<int>(chosen);
  if (cfg.oracle_check) out.oracle_ratio = point_reflection_oracle_volume(s, out.argmax_parameter) / s.volume();
  out.contact = contact_certificate(s, PointReflection<double>{out.argmax_parameter});
  return out;
}

SearchResult maximize_translation(const Simplexd& s, const SearchConfig& cfg) {
  cfg.validate();
  const int n = s.dimension();
  SearchResult out;
  out.family = IsometryFamily::kTranslation;

  std::vector<Vectord> shifts;
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      shifts.push_back(s.vertex(i) - s.vertex(j));
      labels.push_back("s_" + std::to_string(i) + " - s_" + std::to_string(j));
    }
  const std::size_t vertex_pairs = shifts.size();
  Rng rng = make_rng(cfg.seed, kTranslationStream);
  for (int k = 0; k < cfg.random_probes; ++k) {
    const Vectord d = random_unit_vector(n, rng);
    shifts.push_back(contact_translation_length(s, d) * d);
    labels.push_back("probe " + std::to_string(k));
  }

  std::size_t chosen = 0;
  double best = -1;
  for (std::size_t c = 0; c < shifts.size(); ++c) {
    const double ratio = translation_ratio(s, shifts[c]);
    ++out.evaluations;
    if (c >= vertex_pairs) out.probe_max_ratio = std::max(out.probe_max_ratio.value_or(ratio), ratio);
    if (c == 0 || clearly_better(ratio, best)) {
      best = ratio;
      chosen = c;
    }
    out.trace.push_back({static_cast<int>(c), best});
  }

  out.argmax_parameter = shifts[chosen];
  out.max_ratio = best;
  out.candidate_label = labels[chosen];
  // The max is found by the oracle itself, so the cross-check is an
  // independent re-evaluation of the same quantity.
  if (cfg.oracle_check) out.oracle_ratio = translation_ratio(s, out.argmax_parameter);
  out.contact = contact_certificate(s, Translation<double>{out.argmax_parameter});
  return out;
}

ConvexityReport convexity_probe(const Simplexd& k, const Simplexd& k2, const Vectord& t, int samples,
                                double half_range) {
  const int n = k.dimension();
  if (k2.dimension() != n || t.size() != n) throw InputError("convexity_probe: dimension mismatch");
  if (!(t.norm() > 0)) throw InputError("convexity_probe: translation direction must be nonzero");
  if (samples < 3) throw InputError("convexity_probe: need at least 3 samples");
  if (!(half_range > 0)) throw InputError("convexity_probe: range must be positive");

  ConvexityReport r;
  for (int i = 0; i < samples; ++i) {
    const double x = -half_range + 2.0 * half_range * i / (samples - 1);
    const Matrixd moved = k2.vertices().colwise() + x * t;
    r.xs.push_back(x);
    r.values.push_back(union_hull_volume(k.vertices(), moved));
    r.scale = std::max(r.scale, std::abs(r.values.back()));
  }
  r.min_second_difference = std::numeric_limits<double>::infinity();
  for (int i = 1; i + 1 < samples; ++i) {
    const auto u = static_cast<std::size_t>(i);
    r.min_second_difference =
        std::min(r.min_second_difference, r.values[u - 1] - 2.0 * r.values[u] + r.values[u + 1]);
  }
  r.convex = r.min_second_difference >= -1e-7 * r.scale;
  return r;
}

}  // namespace simplexhull
