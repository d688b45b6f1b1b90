#pragma once

// Subcommands of the simplexhull command-line tool. Each cmd_* function does
// the work and returns a RunReport; run() parses arguments, writes output
// and maps errors to exit codes (0 all pass, 1 failed verdict or degenerate
// input, 2 usage or I/O error).

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "simplexhull/checks.hpp"
#include "simplexhull/extremal_search.hpp"
#include "simplexhull/hull_oracle.hpp"
#include "simplexhull/report.hpp"

namespace simplexhull::cli {

struct DimensionRange {
  int lo = 2;
  int hi = 4;
};

/// "a..b" or "a". Throws InputError on anything else.
DimensionRange parse_dimension_range(const std::string& text);

RunReport cmd_verify_theorems(const VerifyOptions& options);

struct ReflectScanOptions {
  std::filesystem::path simplex_file;
  int grid = 16;  ///< sphere grid resolution, >= 8
  bool oracle_check = false;
};

/// One row per admissible sphere-grid direction, with vertex 0 of the input
/// simplex on the mirror.
RunReport cmd_reflect_scan(const ReflectScanOptions& options);

struct SearchOptions {
  std::filesystem::path simplex_file;
  IsometryFamily family = IsometryFamily::kHyperplaneReflection;
  SearchConfig config;
};

struct SearchOutcome {
  RunReport report;  ///< rows are the search trace
  SearchResult result;
};

SearchOutcome cmd_search(const SearchOptions& options);

struct OracleHullOutcome {
  RunReport report;  ///< a single row: volume, facet count, vertex count
  HullResult hull;
};

OracleHullOutcome cmd_oracle_hull(const std::filesystem::path& points_file);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplexhull::cli
