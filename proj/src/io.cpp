#include "simplexhull/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <sstream>

namespace simplexhull {
namespace {

Matrixd columns_from_json(const Json& rows, int n, const char* what) {
  if (!rows.is_array()) throw InputError(std::string(what) + " must be an array");
  Matrixd m(n, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const Json& row = rows[j];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw InputError(std::string(what) + ": every entry needs exactly n coordinates");
    for (int i = 0; i < n; ++i) {
      if (!row[static_cast<std::size_t>(i)].is_number())
        throw InputError(std::string(what) + ": coordinates must be numbers");
      m(i, static_cast<Eigen::Index>(j)) = row[static_cast<std::size_t>(i)].get<double>();
    }
  }
  return m;
}

Json columns_to_json(const Matrixd& m) {
  Json rows = Json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) rows.push_back(vector_to_json(m.col(j)));
  return rows;
}

int dimension_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw InputError("expected an object with integer field \"n\"");
  return j["n"].get<int>();
}

Json parse_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace

Json vector_to_json(const Vectord& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json simplex_to_json(const Simplexd& s) {
  return Json{{"n", s.dimension()}, {"vertices", columns_to_json(s.world_vertices())}};
}

Simplexd simplex_from_json(const Json& j) {
  const int n = dimension_from_json(j);
  if (n < 1 || n > kMaxDimension) throw InputError("simplex: n out of range");
  if (!j.contains("vertices")) throw InputError("simplex: missing \"vertices\"");
  const Matrixd v = columns_from_json(j["vertices"], n, "vertices");
  if (v.cols() != n + 1) throw InputError("simplex: expected n+1 vertices");
  return Simplexd(v);
}

Simplexd load_simplex(const std::filesystem::path& path) { return simplex_from_json(parse_json_file(path)); }

Json point_set_to_json(const PointSet& p) {
  return Json{{"n", p.n}, {"points", columns_to_json(p.points)}};
}

PointSet point_set_from_json(const Json& j) {
  PointSet p;
  p.n = dimension_from_json(j);
  if (p.n < 1) throw InputError("point set: n must be positive");
  if (!j.contains("points")) throw InputError("point set: missing \"points\"");
  p.points = columns_from_json(j["points"], p.n, "points");
  return p;
}

PointSet load_point_set(const std::filesystem::path& path) { return point_set_from_json(parse_json_file(path)); }

Json search_result_to_json(const SearchResult& r) {
  Json j;
  j["family"] = to_string(r.family);
  j["argmax_parameter"] = vector_to_json(r.argmax_parameter);
  j["root_vertex"] = r.root_vertex;
  j["candidate"] = r.candidate_label;
  j["max_ratio"] = r.max_ratio;
  j["oracle_ratio"] = r.oracle_ratio ? Json(*r.oracle_ratio) : Json(nullptr);
  j["probe_max_ratio"] = r.probe_max_ratio ? Json(*r.probe_max_ratio) : Json(nullptr);
  j["evaluations"] = r.evaluations;
  Json contact;
  contact["kind"] = to_string(r.contact.kind);
  contact["description"] = r.contact.description();
  contact["dimension"] = r.contact.dimension;
  if (r.contact.vertex_index) contact["vertex_index"] = *r.contact.vertex_index;
  if (r.contact.image_vertex_index) contact["image_vertex_index"] = *r.contact.image_vertex_index;
  j["contact"] = contact;
  Json trace = Json::array();
  for (const auto& t : r.trace) trace.push_back(Json::array({t.iteration, t.best_ratio}));
  j["trace"] = trace;
  return j;
}

Json hull_result_to_json(const HullResult& h) {
  Json j;
  j["n"] = h.dimension;
  j["volume"] = h.volume;
  j["facet_count"] = h.facets.size();
  j["vertex_count"] = h.vertex_indices.size();
  j["vertex_indices"] = h.vertex_indices;
  return j;
}

std::string format_double(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << x;
  return os.str();
}

void CsvTable::add_row(std::vector<std::string> fields) {
  if (fields.size() != header_.size()) throw InputError("CsvTable: row width does not match header");
  rows_.push_back(std::move(fields));
}

std::string CsvTable::str() const {
  std::ostringstream os;
  auto emit = [&os](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) os << ',';
      const std::string& f = fields[i];
      if (f.find_first_of(",\"\n\r") == std::string::npos) {
        os << f;
      } else {
        os << '"';
        for (char c : f) {
          if (c == '"') os << '"';
          os << c;
        }
        os << '"';
      }
    }
    os << '\n';
  };
  emit(header_);
  for (const auto& r : rows_) emit(r);
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace simplexhull
