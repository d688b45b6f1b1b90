#include "simplexhull/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include "simplexhull/errors.hpp"
#include "simplexhull/io.hpp"

namespace simplexhull {

void RunReport::add(Verdict v) {
  if (!std::isfinite(v.measured) || !std::isfinite(v.expected))
    throw InputError("verdict '" + v.name + "' has a non-finite value");
  verdicts.push_back(std::move(v));
}

bool RunReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

std::string RunReport::rows_csv() const {
  CsvTable table(columns);
  for (const auto& r : rows) table.add_row(r);
  return table.str();
}

std::string RunReport::verdicts_csv() const {
  CsvTable table({"check", "pass", "measured", "expected", "tolerance", "detail"});
  for (const auto& v : verdicts)
    table.add_row({v.name, v.pass ? "true" : "false", format_double(v.measured),
                   format_double(v.expected), format_double(v.tolerance), v.detail});
  return table.str();
}

std::string RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs_digest"] = inputs_digest;
  j["columns"] = columns;
  j["rows"] = rows;
  Json vs = Json::array();
  for (const auto& v : verdicts)
    vs.push_back(Json{{"check", v.name},
                      {"pass", v.pass},
                      {"measured", v.measured},
                      {"expected", v.expected},
                      {"tolerance", v.tolerance},
                      {"detail", v.detail}});
  j["verdicts"] = vs;
  j["all_pass"] = all_pass();
  return j.dump(2) + "\n";
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace simplexhull
