#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "periodrel/cli.hpp"
#include "periodrel/json_io.hpp"
#include "periodrel/relations.hpp"

using namespace periodrel;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "periodrel_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_json(const std::string& name, const json& j) {
  const fs::path p = scratch(name);
  std::ofstream(p) << j.dump();
  return p.string();
}

}  // namespace

TEST_CASE("ideal radical at g = 3") {
  const Outcome o = run_cli({"ideal", "radical", "--g", "3"});
  REQUIRE(o.code == 0);
  const json r = o.report();
  CHECK(r["result"]["rank"] == 3);
  CHECK(r["result"]["verdict"] == "radical");
  CHECK(r["manifest"]["command"] == "ideal radical");
  CHECK(r["manifest"]["seed"].is_null());
  CHECK(r["manifest"]["outcome"] == "radical");
  CHECK(r["manifest"]["versions"].contains("gmp"));
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"ideal", "radical", "--g", "zero"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  const Outcome c3 = run_cli({"relation", "case3", "--g", "2"});
  CHECK(c3.code == 1);
  CHECK(c3.report()["error"] == "Case 3 construction requires even g > 2");
  CHECK(run_cli({"ideal", "member", "--poly", scratch("missing.json").string()}).code == 1);
}

TEST_CASE("scalar action is rejected") {
  EndomorphismAction act{2, Matrix({{3, 0}, {0, 3}}), Matrix::zero(2, 2), Matrix({{3, 0}, {0, 3}})};
  const std::string path = write_json("scalar_act.json", json_io::to_json(act));
  const Outcome o = run_cli({"relation", "build-nonarch", "--act", path});
  CHECK(o.code == 1);
  CHECK(o.report()["error"] == "no relation derivable from scalar endomorphism");
}

TEST_CASE("seeded commands are byte-identical across runs") {
  const std::vector<std::string> args{"symplectic", "sample", "--g", "3", "--seed", "17"};
  const Outcome a = run_cli(args), b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.report()["manifest"]["seed"] == 17);
  CHECK_FALSE(run_cli({"symplectic", "sample", "--g", "3", "--seed", "18"}).out == a.out);

  const Outcome c = run_cli({"relation", "case3", "--g", "4", "--seed", "2"});
  REQUIRE(c.code == 0);
  CHECK(c.out == run_cli({"relation", "case3", "--g", "4", "--seed", "2"}).out);
}

TEST_CASE("member report embeds a re-evaluable witness") {
  const MultiPoly p = MultiPoly::variable(VarId::y(1, 1)) * MultiPoly::variable(VarId::z(2, 2));
  const std::string path = write_json("poly.json", json_io::to_json(p));
  const Outcome o = run_cli({"ideal", "member", "--g", "2", "--poly", path, "--seed", "5"});
  REQUIRE(o.code == 0);
  const json r = o.report();
  CHECK(r["result"]["status"] == "not_in_ideal_certified");
  const json& w = r["result"]["witness"];
  const Matrix y = json_io::matrix_from_json(w["Y"]);
  const Matrix z = json_io::matrix_from_json(w["Z"]);
  const Scalar v = evaluate_at(p, y, z);
  CHECK_FALSE(v.is_zero());
  CHECK(json_io::scalar_from_json(w["value"]) == v);
  CHECK(r["manifest"]["input_digests"].contains(path));
}

TEST_CASE("series invert with a builtin and --out") {
  const fs::path out = scratch("inverse.json");
  fs::remove(out);
  const Outcome o = run_cli({"series", "invert", "--builtin", "x-plus-x2", "--order", "8", "--out", out.string()});
  REQUIRE(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(out);
  const json r = json::parse(in);
  const TruncatedSeries inv = json_io::series_from_json(r["result"]["inverse"]);
  // Inverse of X + X^2 has coefficients (-1)^(n-1) Catalan(n-1).
  const std::vector<long> expected{0, 1, -1, 2, -5, 14, -42, 132, -429};
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(inv[n] == Scalar(expected[n]));
}

TEST_CASE("pretty output is plain text") {
  const Outcome o = run_cli({"ideal", "gens", "--g", "2", "--pretty"});
  REQUIRE(o.code == 0);
  CHECK(o.out.find("count: 1") != std::string::npos);
  json parsed;
  CHECK_THROWS(parsed = json::parse(o.out));
}

TEST_CASE("reports chain into later commands") {
  const std::string act = write_json("chain_act.json", json::parse(R"({"g":2,"A":[[1,1],[0,1]],"B":[[0,0],[0,0]],"D":[[1,1],[0,1]]})"));
  const std::string rel = scratch("chain_rel.json").string(), data = scratch("chain_data.json").string();
  REQUIRE(run_cli({"relation", "build-nonarch", "--act", act, "--out", rel}).code == 0);
  REQUIRE(run_cli({"relation", "synthesize", "--act", act, "--seed", "4", "--out", data}).code == 0);
  const Outcome v = run_cli({"relation", "verify", "--rel", rel, "--data", data});
  REQUIRE(v.code == 0);
  CHECK(v.report()["result"]["vanishes"] == true);
}
