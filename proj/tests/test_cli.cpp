#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "acs/cli.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "acshom");
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = acs::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    path = std::string("cli_graph_input_") + std::to_string(counter++) + ".json";
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
  static int counter;
};

int TempFile::counter = 0;

}  // namespace

TEST_CASE("betti command") {
  const CliResult gf2 = run_cli({"betti", "--n", "4", "--method", "gf2"});
  CHECK(gf2.code == 0);
  CHECK(gf2.out.find("[1, 4, 17]") != std::string::npos);

  const CliResult morse = run_cli({"betti", "--n", "3", "--method", "morse"});
  CHECK(morse.code == 0);
  CHECK(morse.out.find("[1, 7]") != std::string::npos);

  const CliResult formula = run_cli({"betti", "--n", "2"});
  CHECK(formula.code == 0);
  CHECK(formula.out.find("[2]") != std::string::npos);

  CHECK(run_cli({"betti", "--n", "13", "--method", "formula"}).code == 2);
  CHECK(run_cli({"betti", "--n", "9", "--method", "gf2"}).code == 2);
  CHECK(run_cli({"betti", "--n", "1"}).code == 2);
  CHECK(run_cli({"betti"}).code == 2);
}

TEST_CASE("json reports are schema-stable and deterministic") {
  const CliResult r1 = run_cli({"betti", "--n", "4", "--method", "gf2", "--json"});
  REQUIRE(r1.code == 0);
  auto j1 = nlohmann::json::parse(r1.out);
  CHECK(j1.at("command") == "betti");
  CHECK(j1.at("status") == "ok");
  CHECK(j1.at("parameters").at("n") == 4);
  CHECK(j1.at("parameters").at("method") == "gf2");
  CHECK(j1.at("results").at("betti") == nlohmann::json::array({1, 4, 17}));
  CHECK(j1.contains("elapsed_ms"));

  const CliResult r2 = run_cli({"betti", "--n", "4", "--method", "gf2", "--json"});
  auto j2 = nlohmann::json::parse(r2.out);
  j1.erase("elapsed_ms");
  j2.erase("elapsed_ms");
  CHECK(j1.dump() == j2.dump());
}

TEST_CASE("fvector command") {
  const CliResult r = run_cli({"fvector", "--n", "5", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("results").at("f_vector") == nlohmann::json::array({30, 140, 240, 160}));
  CHECK(j.at("results").at("euler_characteristic") == -30);
  CHECK(j.at("results").at("consistent") == true);
}

TEST_CASE("verify command") {
  CHECK(run_cli({"verify", "--n", "3", "--checks", "acyclicity"}).code == 0);
  CHECK(run_cli({"verify", "--n", "4", "--checks", "acyclicity,morse-boundary,oracle"}).code == 0);
  CHECK(run_cli({"verify", "--n", "3", "--checks", "bogus"}).code == 2);
  CHECK(run_cli({"verify", "--n", "9"}).code == 2);

  // strict unique-support certification reports the pair-set gammas
  const CliResult basis = run_cli({"verify", "--n", "3", "--checks", "basis", "--json"});
  CHECK(basis.code == 1);
  const auto j = nlohmann::json::parse(basis.out);
  CHECK(j.at("status") == "fail");
  CHECK(j.at("results").at("checks").at("basis").at("ok") == false);

  const CliResult oracle = run_cli({"verify", "--n", "4", "--checks", "oracle"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("formula") != std::string::npos);
  CHECK(oracle.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("graph command") {
  const TempFile circle(R"({
    "vertices": ["p", "q"],
    "edges": [["p", "q"], ["p", "q"]],
    "anchors": ["p", "q"],
    "n": 3
  })");
  const CliResult r = run_cli({"graph", "--input", circle.path, "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("results").at("betti") == nlohmann::json::array({1, 7}));
  CHECK(j.at("results").at("f_vector") == nlohmann::json::array({6, 12}));

  const TempFile path3(R"({
    "vertices": ["a", "m", "b"],
    "edges": [["a", "m"], ["m", "b"]],
    "anchors": ["a", "b"],
    "n": 3
  })");
  const CliResult rp = run_cli({"graph", "--input", path3.path, "--json"});
  REQUIRE(rp.code == 0);
  CHECK(nlohmann::json::parse(rp.out).at("results").at("betti") ==
        nlohmann::json::array({1, 1}));

  const TempFile loop(R"({
    "vertices": ["a"],
    "edges": [["a", "a"]],
    "anchors": ["a"],
    "n": 2
  })");
  const CliResult rl = run_cli({"graph", "--input", loop.path});
  CHECK(rl.code == 2);
  CHECK(rl.err.find("subdivide") != std::string::npos);

  const TempFile bad("{ not json");
  CHECK(run_cli({"graph", "--input", bad.path}).code == 2);
  CHECK(run_cli({"graph", "--input", "no_such_file.json"}).code == 2);

  const TempFile unknown_anchor(R"({
    "vertices": ["a"],
    "edges": [],
    "anchors": ["zz"],
    "n": 1
  })");
  CHECK(run_cli({"graph", "--input", unknown_anchor.path}).code == 2);
}

TEST_CASE("hom-graph command") {
  const CliResult r2 = run_cli({"hom-graph", "--m", "2", "--json"});
  REQUIRE(r2.code == 0);
  const auto j = nlohmann::json::parse(r2.out);
  CHECK(j.at("results").at("vertices") == 6);
  CHECK(j.at("results").at("edges") == 6);
  CHECK(j.at("results").at("beta1") == 1);
  CHECK(j.at("results").at("zeta") == 1);
  CHECK(j.at("results").at("ok") == true);

  const CliResult r1 = run_cli({"hom-graph", "--m", "1"});
  CHECK(r1.code == 0);
  CHECK(r1.out.find("beta1 = 0, zeta = 0") != std::string::npos);

  CHECK(run_cli({"hom-graph", "--m", "8"}).code == 2);
  CHECK(run_cli({"hom-graph"}).code == 2);
}

TEST_CASE("cell budget guard") {
  CHECK(run_cli({"betti", "--n", "8", "--method", "gf2", "--max-cells", "1000"}).code == 2);
  const TempFile big(R"({
    "vertices": ["p", "q"],
    "edges": [["p", "q"], ["p", "q"]],
    "anchors": ["p"],
    "n": 12
  })");
  CHECK(run_cli({"graph", "--input", big.path, "--max-cells", "1000"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({}).code == 2);
}
