#include "simplexhull/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "simplexhull/io.hpp"
#include "simplexhull/reflection.hpp"

namespace simplexhull::cli {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("not an integer: '" + std::string(s) + "'");
  return value;
}

std::string digest_of(const std::string& command, const std::string& flags, const std::string& file_text) {
  return fnv1a_hex(command + '\n' + flags + '\n' + file_text);
}

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

void print_verdicts(const RunReport& report, std::ostream& os) {
  for (const auto& v : report.verdicts)
    os << (v.pass ? "PASS " : "FAIL ") << v.name << ": measured " << format_double(v.measured) << ", expected "
       << format_double(v.expected) << ", tolerance " << format_double(v.tolerance)
       << (v.detail.empty() ? "" : " (" + v.detail + ")") << '\n';
}

}  // namespace

DimensionRange parse_dimension_range(const std::string& text) {
  DimensionRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, dots));
    r.hi = parse_int(std::string_view(text).substr(dots + 2));
  }
  return r;
}

RunReport cmd_verify_theorems(const VerifyOptions& options) {
  RunReport report = verify_theorems(options);
  report.columns = {"check", "pass", "measured", "expected", "tolerance", "detail"};
  for (const auto& v : report.verdicts)
    report.rows.push_back({v.name, v.pass ? "true" : "false", format_double(v.measured), format_double(v.expected),
                           format_double(v.tolerance), v.detail});
  return report;
}

RunReport cmd_reflect_scan(const ReflectScanOptions& options) {
  if (options.grid < 8) throw InputError("grid must be at least 8");
  const std::string text = read_text_file(options.simplex_file);
  const Simplexd s = load_simplex(options.simplex_file);
  const int n = s.dimension();
  if (n < 2) throw InputError("reflect-scan needs n >= 2");
  if (options.oracle_check && n > kOracleMaxDimension) throw InputError("oracle check supports n <= 7");

  RunReport report;
  report.command = "reflect-scan";
  report.inputs_digest =
      digest_of(report.command, "grid=" + std::to_string(options.grid) + " oracle=" + (options.oracle_check ? "1" : "0"),
                text);
  for (int i = 0; i < n; ++i) report.columns.push_back("u_" + std::to_string(i + 1));
  report.columns.push_back("k");
  report.columns.push_back("formula_ratio");
  if (options.oracle_check) report.columns.push_back("oracle_ratio");
  report.columns.push_back("facet_count_bound");
  report.columns.push_back("single_facet_bound");

  const ReflectionRatio<double> objective(s);
  const auto sf = single_facet_bound(s);
  const Matrixd& v = s.vertices();
  double min_margin = kInf, sf_margin = kInf, oracle_err = 0, max_ratio = 0;
  int sf_rows = 0;
  const long total = sphere_grid_size(n, options.grid);
  for (long g = 0; g < total; ++g) {
    const Vectord u = sphere_grid_direction(n, options.grid, g);
    if (!objective.admissible(u)) continue;
    const auto b = objective.breakdown(u);
    std::vector<std::string> row;
    for (int i = 0; i < n; ++i) row.push_back(format_double(u(i)));
    row.push_back(std::to_string(b.upper_side.count()));
    row.push_back(format_double(b.ratio));
    max_ratio = std::max(max_ratio, b.ratio);
    if (options.oracle_check) {
      const Matrixd mirrored = v - 2.0 * u * (u.transpose() * v);
      const double oracle = union_hull_volume(v, mirrored) / s.volume();
      oracle_err = std::max(oracle_err, rel_err(b.ratio, oracle));
      row.push_back(format_double(oracle));
    }
    const double fc_bound = facet_count_bound(s, b.upper_side);
    min_margin = std::min(min_margin, fc_bound / b.ratio);
    row.push_back(format_double(fc_bound));
    if (b.upper_side.facet_indices == std::vector<int>{0}) {
      ++sf_rows;
      sf_margin = std::min(sf_margin, sf.bound / b.ratio);
      row.push_back(format_double(sf.bound));
    } else {
      row.push_back("");
    }
    report.rows.push_back(std::move(row));
  }

  const std::string rows = std::to_string(report.rows.size()) + " admissible directions";
  report.add(Verdict{"facet-count bound dominates the ratio", report.rows.empty() || min_margin >= 1.0 - 1e-12,
                     report.rows.empty() ? 1.0 : min_margin, 1.0, 1e-12,
                     rows + "; measured is min bound/ratio; max ratio " + format_double(max_ratio), 0});
  report.add(Verdict{"single-facet bound dominates the ratio", sf_rows == 0 || sf_margin >= 1.0 - 1e-12,
                     sf_rows == 0 ? 1.0 : sf_margin, 1.0, 1e-12,
                     std::to_string(sf_rows) + " rows with only facet 0 upper; measured is min bound/ratio", 0});
  if (options.oracle_check)
    report.add(Verdict{"facet formula matches hull oracle", oracle_err < 1e-8, oracle_err, 0, 1e-8, rows, 0});
  return report;
}

SearchOutcome cmd_search(const SearchOptions& options) {
  const std::string text = read_text_file(options.simplex_file);
  const Simplexd s = load_simplex(options.simplex_file);
  const SearchConfig& cfg = options.config;
  cfg.validate();
  if (cfg.oracle_check && s.dimension() > kOracleMaxDimension) throw InputError("oracle check supports n <= 7");
  if (options.family != IsometryFamily::kHyperplaneReflection && s.dimension() > kOracleMaxDimension)
    throw InputError("translation and point searches support n <= 7");
  if (options.family == IsometryFamily::kHyperplaneReflection && s.dimension() < 2)
    throw InputError("hyperplane search needs n >= 2");

  SearchOutcome out;
  switch (options.family) {
    case IsometryFamily::kTranslation: out.result = maximize_translation(s, cfg); break;
    case IsometryFamily::kPointReflection: out.result = maximize_point_reflection(s, cfg); break;
    case IsometryFamily::kHyperplaneReflection: out.result = maximize_hyperplane_reflection(s, cfg); break;
  }

  RunReport& report = out.report;
  report.command = "search";
  std::ostringstream flags;
  flags << "family=" << to_string(options.family) << " grid=" << cfg.coarse_grid_resolution
        << " iterations=" << cfg.refinement_iterations << " shrink=" << format_double(cfg.refinement_shrink)
        << " seed=" << cfg.seed << " oracle=" << cfg.oracle_check << " probes=" << cfg.random_probes;
  report.inputs_digest = digest_of(report.command, flags.str(), text);
  report.columns = {"iteration", "best_ratio"};
  for (const auto& t : out.result.trace)
    report.rows.push_back({std::to_string(t.iteration), format_double(t.best_ratio)});
  if (out.result.oracle_ratio)
    report.add(Verdict{"search maximum matches hull oracle",
                       rel_err(out.result.max_ratio, *out.result.oracle_ratio) < 1e-6, *out.result.oracle_ratio,
                       out.result.max_ratio, 1e-6, out.result.candidate_label, 0});
  return out;
}

OracleHullOutcome cmd_oracle_hull(const std::filesystem::path& points_file) {
  const std::string text = read_text_file(points_file);
  const PointSet p = load_point_set(points_file);
  OracleHullOutcome out;
  out.hull = hull_volume(p.points, p.n);
  out.report.command = "oracle-hull";
  out.report.inputs_digest = digest_of(out.report.command, "", text);
  out.report.columns = {"n", "volume", "facet_count", "vertex_count"};
  out.report.rows.push_back({std::to_string(p.n), format_double(out.hull.volume),
                             std::to_string(out.hull.facets.size()), std::to_string(out.hull.vertex_indices.size())});
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Volumes of convex hulls of a simplex and an isometric copy"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string output;
  auto add_common_output = [&](CLI::App* sub) {
    sub->add_option("--output", output, "Write the report table to this file");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* verify = app.add_subcommand("verify-theorems", "Run every verification suite");
  std::string n_range = "2..4";
  VerifyOptions vopt;
  verify->add_option("--n", n_range, "Dimension range a..b with 2 <= a <= b <= 6");
  verify->add_option("--seed", vopt.seed, "Random seed");
  verify->add_option("--samples", vopt.samples, "Facet-formula pairs per dimension; other counts scale with it");
  add_common_output(verify);

  auto* scan = app.add_subcommand("reflect-scan", "Tabulate the mirror ratio over a sphere grid");
  ReflectScanOptions sopt;
  scan->add_option("simplex", sopt.simplex_file, "Simplex JSON file")->required();
  scan->add_option("--grid", sopt.grid, "Sphere grid resolution (>= 8)");
  scan->add_flag("--oracle-check", sopt.oracle_check, "Add a brute-force hull column");
  add_common_output(scan);

  auto* search = app.add_subcommand("search", "Maximize the hull ratio over one isometry family");
  SearchOptions qopt;
  std::string family = "hyperplane";
  search->add_option("simplex", qopt.simplex_file, "Simplex JSON file")->required();
  search->add_option("--family", family, "translation, point or hyperplane")
      ->check(CLI::IsMember({"translation", "point", "hyperplane"}));
  search->add_option("--grid", qopt.config.coarse_grid_resolution, "Coarse grid resolution (>= 8)");
  search->add_option("--iterations", qopt.config.refinement_iterations, "Refinement iterations (>= 10)");
  search->add_option("--shrink", qopt.config.refinement_shrink, "Neighbourhood shrink factor in (0,1)");
  search->add_option("--seed", qopt.config.seed, "Random seed");
  search->add_option("--samples", qopt.config.random_probes, "Random probe count");
  search->add_flag("--oracle-check,!--no-oracle-check", qopt.config.oracle_check,
                   "Re-evaluate the optimum with the brute-force hull (default on)");
  add_common_output(search);

  auto* hull = app.add_subcommand("oracle-hull", "Brute-force convex hull volume of a point set");
  std::string points_file;
  hull->add_option("points", points_file, "Point set JSON file")->required();
  hull->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  auto emit = [&](const RunReport& report, const std::string& table) {
    const std::string body = (format == "json") ? report.to_json() : table;
    if (output.empty()) {
      out << body;
    } else {
      write_text_file(output, body);
    }
  };

  try {
    if (verify->parsed()) {
      const DimensionRange r = parse_dimension_range(n_range);
      vopt.n_min = r.lo;
      vopt.n_max = r.hi;
      vopt.validate();
      const RunReport report = cmd_verify_theorems(vopt);
      emit(report, report.rows_csv());
      if (!output.empty()) print_verdicts(report, out);
      return report.all_pass() ? 0 : 1;
    }
    if (scan->parsed()) {
      const RunReport report = cmd_reflect_scan(sopt);
      emit(report, report.rows_csv());
      print_verdicts(report, output.empty() ? err : out);
      return report.all_pass() ? 0 : 1;
    }
    if (search->parsed()) {
      qopt.family = parse_family(family);
      const SearchOutcome o = cmd_search(qopt);
      out << search_result_to_json(o.result).dump(2) << '\n';
      if (!output.empty()) write_text_file(output, format == "json" ? o.report.to_json() : o.report.rows_csv());
      print_verdicts(o.report, err);
      return o.report.all_pass() ? 0 : 1;
    }
    const OracleHullOutcome o = cmd_oracle_hull(points_file);
    if (format == "json") {
      out << hull_result_to_json(o.hull).dump(2) << '\n';
    } else {
      out << o.report.rows_csv();
    }
    return 0;
  } catch (const DegenerateSimplex& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DegenerateHull& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace simplexhull::cli
