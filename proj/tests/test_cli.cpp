#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toric3/cli.hpp"

using toric3::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("mindist") {
  auto r = run({"mindist", "--q", "5", "--poly", "T(1,2)", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "formula: 46"));
  CHECK(contains(r.out, "brute:   46"));
  CHECK(contains(r.out, "OK"));

  r = run({"mindist", "--q", "5", "--poly", "P22", "--method", "formula"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "formula: 36"));

  r = run({"mindist", "--q", "5", "--poly", "W2:1", "--method", "formula"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "NoFormulaForFamily"));

  r = run({"mindist", "--q", "5", "--poly", "W2:1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "none for this family"));

  r = run({"mindist", "--q", "3", "--poly", "[(1,0,0);(3,0,0)]", "--method", "brute"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "ExponentCollision"));

  r = run({"mindist", "--q", "5", "--poly", "T(1,"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "ParseError"));
}

TEST_CASE("mindist --verbose dumps the matrix") {
  auto r = run({"mindist", "--q", "3", "--poly", "T(0,1)", "--method", "brute", "--verbose"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "0 0 0 0 0 0 0 0\n"));
}

TEST_CASE("equiv") {
  auto r = run({"equiv", "--q", "5", "--a", "T(1,2)", "--b", "T(3,2)"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "theorem: EQUIVALENT"));
  CHECK(contains(r.out, "witness: EQUIVALENT"));
  CHECK(contains(r.out, "agreement: yes"));

  r = run({"equiv", "--q", "5", "--a", "P22", "--b", "P31"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "theorem: INEQUIVALENT (theorem: signatures-differ)"));

  r = run({"equiv", "--q", "13", "--a", "T(1,9)", "--b", "T(2,9)", "--method", "theorem"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "theorem: INEQUIVALENT"));

  r = run({"equiv", "--q", "13", "--a", "T(1,9)", "--b", "T(2,9)"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "agreement: NO"));

  r = run({"equiv", "--q", "5", "--a", "T(1,1)", "--b", "P22", "--method", "witness"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "ShapeMismatch"));

  r = run({"equiv", "--q", "5", "--a", "T(1,2)", "--b", "T(3,2)", "--method", "witness", "--verbose"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "column map"));
}

TEST_CASE("census json") {
  auto a = run({"census", "--q", "5", "--dim", "4"});
  auto b = run({"census", "--q", "5", "--dim", "4", "--threads", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  REQUIRE(doc["rows"].size() == 5);
  const auto& row = doc["rows"][2];
  CHECK(row["q"] == 5);
  CHECK(row["family"] == "T");
  CHECK(row["s"] == 1);
  CHECK(row["t"] == 2);
  CHECK(row["n"] == 64);
  CHECK(row["k"] == 4);
  CHECK(row["d_formula_lower"] == 46);
  CHECK(row["d_formula_upper"] == 46);
  CHECK(row["d_brute"] == 46);
  CHECK(row["theorem_agrees"] == true);
  CHECK(doc["rows"][0]["class_id"] == doc["rows"][1]["class_id"]);
  CHECK(doc["pairs"].size() == 10);
}

TEST_CASE("census csv to a file") {
  const auto path = std::filesystem::temp_directory_path() / "toric3_census_test.csv";
  auto r = run({"census", "--q", "7", "--dim", "4", "--format", "csv", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header == "q,family,s,t,n,k,d_formula_lower,d_formula_upper,d_brute,class_id,theorem_agrees");
  CHECK(first == "7,T,0,1,216,4,180,180,180,0,true");
  std::filesystem::remove(path);
}

TEST_CASE("census reports disagreements and fails") {
  auto r = run({"census", "--q", "5", "--dim", "5", "--format", "csv"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "TheoremWitnessMismatch"));
  CHECK(contains(r.out, "P22,,,64,5,36,36,36"));
  CHECK(contains(r.out, "false"));
}

TEST_CASE("census errors") {
  CHECK(run({"census", "--q", "6", "--dim", "4"}).code == 2);
  CHECK(run({"census", "--q", "5", "--dim", "6"}).code == 2);
  CHECK(run({"census", "--q", "4", "--dim", "5"}).code == 2);
  auto r = run({"census", "--q", "5", "--dim", "4", "--out", "/nonexistent-dir/x.json"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "IOError"));
}

TEST_CASE("verify") {
  auto r = run({"verify", "--q", "5"});
  CHECK(contains(r.out, "[1] dim-4 formula vs brute force GF(5)"));
  CHECK(contains(r.out, "[7] table fidelity"));
  CHECK(run({"verify", "--q", "6"}).code == 2);
  CHECK(run({"verify", "--q", "4,3"}).code == 0);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"mindist", "--q", "5"}).code == 2);
  CHECK(run({"mindist", "--q", "5", "--poly", "T(1,1)", "--method", "fast"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  auto info = run({"field-info", "--q", "9"});
  CHECK(info.code == 0);
  CHECK(contains(info.out, "GF(9) = GF(3^2)"));
}
