#pragma once

// JSON and CSV formats shared by the CLI and the test fixtures.
//
//   simplex:   {"n": 3, "vertices": [[x,y,z], ...]}   (n+1 vertices)
//   point set: {"n": 3, "points":   [[x,y,z], ...]}

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "simplexhull/extremal_search.hpp"
#include "simplexhull/hull_oracle.hpp"
#include "simplexhull/simplex.hpp"

namespace simplexhull {

using Json = nlohmann::ordered_json;

struct PointSet {
  int n = 0;
  Matrixd points;  ///< n x m
};

Json simplex_to_json(const Simplexd& s);
Simplexd simplex_from_json(const Json& j);
Simplexd load_simplex(const std::filesystem::path& path);

Json point_set_to_json(const PointSet& p);
PointSet point_set_from_json(const Json& j);
PointSet load_point_set(const std::filesystem::path& path);

Json vector_to_json(const Vectord& v);
Json search_result_to_json(const SearchResult& r);
Json hull_result_to_json(const HullResult& h);

/// Shortest round-trip decimal form with 17 significant digits, '.' separator.
std::string format_double(double x);

/// RFC 4180 CSV: header row, CRLF-free '\n' records, fields quoted only when
/// they contain a comma, quote or newline.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> fields);
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace simplexhull
