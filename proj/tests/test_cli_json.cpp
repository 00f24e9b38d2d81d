#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "solang/families.hpp"
#include "solang/json_io.hpp"

using namespace solang;

#ifndef SOLANG_CLI_PATH
#define SOLANG_CLI_PATH "./solang"
#endif

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(SOLANG_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("polytope JSON round-trip") {
  FamilySpec s;
  s.name = FamilyName::Reeve;
  s.h = 7;
  auto p = build(s);
  auto j = polytope_to_json(p);
  auto q = polytope_from_json(j);
  CHECK(q.vertices() == p.vertices());
  CHECK(q.facets() == p.facets());

  // rational coordinates
  auto j2 = json::parse(R"({"vertices": [["0"], ["1/2"]]})");
  auto seg = polytope_from_json(j2);
  CHECK(seg.vertices()[1][0] == Rational(1, 2));

  CHECK_THROWS_AS(polytope_from_json(json::parse("{}")), ValidationError);
}

TEST_CASE("cli: family output is accepted by other subcommands") {
  auto fam = run_cli("family reeve --h 12");
  CHECK(fam.exit_code == 0);
  std::string path = "/tmp/solang_test_reeve12.json";
  {
    std::ofstream f(path);
    f << fam.out;
  }
  auto eh = run_cli("ehrhart --file " + path);
  CHECK(eh.exit_code == 0);
  auto j = json::parse(eh.out);
  CHECK(j["outputs"]["coefficients"] == json::array({"1", "0", "1", "2"}));

  auto hs = run_cli("hstar --file " + path);
  CHECK(json::parse(hs.out)["outputs"]["entries"] == json::array({"1", "0", "11", "0"}));
}

TEST_CASE("cli: identical seeds give byte-identical output") {
  std::string args = "vertexsum --family cube --d 4 --policy mc --mc-samples 20000 --seed 9";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto c = run_cli("vertexsum --family cube --d 4 --policy mc --mc-samples 20000 --seed 10");
  CHECK(a.out != c.out);
}

TEST_CASE("cli: angle subcommand") {
  auto r = run_cli("angle --family cube --d 2 --point 0,0");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["outputs"]["value"] == doctest::Approx(0.25));
  CHECK(j["outputs"]["method"] == "exact");
}

TEST_CASE("cli: usage errors exit 1") {
  CHECK(run_cli("ehrhart").exit_code == 1);             // no input
  CHECK(run_cli("nonsense").exit_code == 1);            // unknown subcommand
  CHECK(run_cli("family reeve --h 0").exit_code == 1);  // invalid parameter
}

TEST_CASE("cli: valuation subcommands") {
  auto fam = run_cli("family simplex --d 2");
  std::string path = "/tmp/solang_test_tri.json";
  {
    std::ofstream f(path);
    f << fam.out;
  }
  auto fam2 = run_cli("family cube --d 2");
  std::string path2 = "/tmp/solang_test_sq.json";
  {
    std::ofstream f(path2);
    f << fam2.out;
  }
  auto num = run_cli("valuation numerator --file " + path + " --val indicator");
  CHECK(num.exit_code == 0);
  CHECK(json::parse(num.out)["outputs"]["exact"] == json::array({"1", "0", "0"}));

  auto mono = run_cli("valuation monotone " + path + " " + path2 + " --val indicator");
  CHECK(mono.exit_code == 0);
  CHECK(json::parse(mono.out)["outputs"]["holds"] == true);

  auto pi = run_cli("valuation pi-numerator " + path + " --val indicator");
  CHECK(pi.exit_code == 0);
  CHECK(json::parse(pi.out)["outputs"]["half_open_counts"] == json::array({1, 0, 0}));
}

TEST_CASE("cli: period subcommand") {
  auto r = run_cli("period --family half-prism --d 2");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["outputs"]["collapsed"] == true);
  CHECK(j["outputs"]["declared_period"] == 2);
}

TEST_CASE("cli: gram-check subcommand") {
  auto r = run_cli("gram-check --family regular-tetrahedron");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["outputs"]["pass"] == true);
  CHECK(j["outputs"]["residual"].get<double>() < 1e-9);
}
