#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "simplexhull/cli.hpp"
#include "simplexhull/errors.hpp"
#include "simplexhull/io.hpp"
#include "simplexhull/reflection.hpp"
#include "simplexhull/sampling.hpp"
#include "support.hpp"

using namespace simplexhull;
namespace fs = std::filesystem;

namespace {

const fs::path kData = SIMPLEXHULL_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("simplexhull_test_" + name); }

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string f;
    std::istringstream ls(line);
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    rows.push_back(fields);
  }
  return rows;
}

}  // namespace

TEST_CASE("simplex JSON round trip keeps world coordinates") {
  Rng rng = make_rng(61);
  Matrixd v = random_simplex(3, rng).vertices();
  v.colwise() += Vectord::Constant(3, 4.0);
  const Simplexd s(v);
  const Simplexd back = simplex_from_json(Json::parse(simplex_to_json(s).dump()));
  CHECK((back.world_vertices() - v).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("malformed JSON inputs are rejected") {
  CHECK_THROWS_AS(simplex_from_json(Json::parse(R"({"vertices": [[0,0],[1,0],[0,1]]})")), InputError);
  CHECK_THROWS_AS(simplex_from_json(Json::parse(R"({"n": 2, "vertices": [[0,0],[1,0]]})")), InputError);
  CHECK_THROWS_AS(simplex_from_json(Json::parse(R"({"n": 2, "vertices": [[0,0],[1,0],[0,"x"]]})")), InputError);
  CHECK_THROWS_AS(simplex_from_json(Json::parse(R"({"n": 2, "vertices": [[0,0],[1,0],[2,0]]})")),
                  DegenerateSimplex);
  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"n": 2, "points": [[0,0,0]]})")), InputError);
  CHECK_THROWS_AS(load_simplex(kData / "does_not_exist.json"), IoError);
}

TEST_CASE("point set JSON round trip") {
  const PointSet p = load_point_set(kData / "cube3.json");
  CHECK(p.n == 3);
  CHECK(p.points.cols() == 8);
  const PointSet back = point_set_from_json(point_set_to_json(p));
  CHECK(back.points == p.points);
}

TEST_CASE("CSV quoting and number formatting") {
  CsvTable t({"a", "b"});
  t.add_row({"plain", "with,comma"});
  t.add_row({"say \"hi\"", "line\nbreak"});
  CHECK(t.str() == "a,b\nplain,\"with,comma\"\n\"say \"\"hi\"\"\",\"line\nbreak\"\n");
  CHECK_THROWS_AS(t.add_row({"only one"}), InputError);
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  CHECK(std::stod(format_double(M_PI)) == M_PI);
}

TEST_CASE("report digest and verdict invariants") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  RunReport r;
  CHECK_THROWS_AS(r.add(Verdict{"bad", true, std::nan(""), 0, 0, "", 0}), InputError);
  r.add(Verdict{"good", true, 1, 1, 0, "", 0});
  CHECK(r.all_pass());
  r.add(Verdict{"bad", false, 1, 2, 0, "", 0});
  CHECK_FALSE(r.all_pass());
  CHECK(Json::parse(r.to_json())["verdicts"].size() == 2);
}

TEST_CASE("dimension range parsing") {
  const auto r = cli::parse_dimension_range("2..5");
  CHECK(r.lo == 2);
  CHECK(r.hi == 5);
  CHECK(cli::parse_dimension_range("3").hi == 3);
  CHECK_THROWS_AS(cli::parse_dimension_range("2..x"), InputError);
  CHECK_THROWS_AS(cli::parse_dimension_range(""), InputError);
}

TEST_CASE("oracle-hull on cube corners and on the unit right 4-simplex") {
  const Run cube = run({"oracle-hull", (kData / "cube3.json").string()});
  CHECK(cube.code == 0);
  const auto rows = parse_csv(cube.out);
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[1][1]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[1][2] == "6");

  const Run simplex = run({"oracle-hull", (kData / "right4_points.json").string(), "--format", "json"});
  CHECK(simplex.code == 0);
  CHECK(Json::parse(simplex.out)["volume"].get<double>() == doctest::Approx(1.0 / 24).epsilon(1e-12));
}

TEST_CASE("oracle-hull on a mirrored single-facet configuration matches the formula") {
  const Simplexd s = load_simplex(kData / "regular3.json");
  const auto sf = single_facet_bound(s);
  const Matrixd v = s.vertices();
  PointSet p{3, Matrixd(3, 8)};
  p.points << v, support::mirror(v, sf.optimal_u);
  const fs::path file = temp_file("mirror.json");
  write_text_file(file, point_set_to_json(p).dump());
  const Run r = run({"oracle-hull", file.string(), "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(support::rel(Json::parse(r.out)["volume"].get<double>() / s.volume(),
                     reflection_hull_ratio(s, sf.optimal_u).ratio) < 1e-8);
  fs::remove(file);
}

TEST_CASE("exit codes for degenerate input, bad usage and unreadable files") {
  CHECK(run({"oracle-hull", (kData / "flat3.json").string()}).code == 1);
  CHECK(run({"search", (kData / "degenerate3.json").string(), "--family", "point"}).code == 1);
  CHECK(run({"verify-theorems", "--n", "9..9"}).code == 2);
  CHECK(run({"verify-theorems", "--n", "4..2"}).code == 2);
  CHECK(run({"reflect-scan", (kData / "missing.json").string()}).code == 2);
  CHECK(run({"reflect-scan", (kData / "regular3.json").string(), "--grid", "4"}).code == 2);
  CHECK(run({"search", (kData / "regular3.json").string(), "--family", "rotation"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({}).code == 2);
  const fs::path junk = temp_file("junk.json");
  write_text_file(junk, "{not json");
  CHECK(run({"oracle-hull", junk.string()}).code == 2);
  fs::remove(junk);
}

TEST_CASE("reflect-scan on the regular tetrahedron") {
  const fs::path out = temp_file("scan.csv");
  const Run r = run({"reflect-scan", (kData / "regular3.json").string(), "--grid", "32", "--oracle-check", "--output",
                     out.string()});
  CHECK(r.code == 0);
  const auto rows = parse_csv(read_text_file(out));
  REQUIRE(rows.size() > 100);
  const auto& header = rows[0];
  REQUIRE(header.size() == 8);
  CHECK(header[3] == "k");
  CHECK(header[5] == "oracle_ratio");
  double max_ratio = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double formula = std::stod(rows[i][4]);
    const double oracle = std::stod(rows[i][5]);
    const double fc_bound = std::stod(rows[i][6]);
    max_ratio = std::max(max_ratio, formula);
    CHECK(fc_bound >= formula);
    CHECK(support::rel(formula, oracle) < 1e-8);
    CHECK(rows[i][7].empty() == (rows[i][3] != "1" || std::stod(rows[i][7]) < 0));
  }
  CHECK(max_ratio == doctest::Approx(6.0).epsilon(2e-3));
  CHECK(max_ratio <= 6.0 + 1e-9);
  fs::remove(out);
}

TEST_CASE("search subcommand reproduces the known maxima") {
  const fs::path right3 = kData / "right3.json";
  const Run point = run({"search", right3.string(), "--family", "point"});
  REQUIRE(point.code == 0);
  CHECK(Json::parse(point.out)["max_ratio"].get<double>() == doctest::Approx(8.0).epsilon(1e-8));

  const Run translation = run({"search", (kData / "right2.json").string(), "--family", "translation"});
  REQUIRE(translation.code == 0);
  CHECK(Json::parse(translation.out)["max_ratio"].get<double>() == doctest::Approx(3.0).epsilon(1e-8));

  const fs::path trace = temp_file("trace.csv");
  const Run hyper =
      run({"search", (kData / "regular4.json").string(), "--family", "hyperplane", "--output", trace.string()});
  REQUIRE(hyper.code == 0);
  const Json j = Json::parse(hyper.out);
  CHECK(std::abs(j["max_ratio"].get<double>() - 8.0) <= 1e-4);
  CHECK(j["contact"]["description"] == "single common vertex (index 0)");
  const auto rows = parse_csv(read_text_file(trace));
  CHECK(rows[0] == std::vector<std::string>{"iteration", "best_ratio"});
  CHECK(rows.size() == 42);
  fs::remove(trace);
}

TEST_CASE("verify-theorems is deterministic and passes on a small run") {
  const std::vector<std::string> args{"verify-theorems", "--n", "2..3", "--seed", "3", "--samples", "10"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto ja = cli::cmd_verify_theorems(VerifyOptions{2, 3, 3, 10});
  const auto jb = cli::cmd_verify_theorems(VerifyOptions{2, 3, 3, 10});
  CHECK(ja.to_json() == jb.to_json());
  CHECK(ja.inputs_digest == jb.inputs_digest);
  CHECK(ja.inputs_digest != cli::cmd_verify_theorems(VerifyOptions{2, 3, 4, 10}).inputs_digest);
}
