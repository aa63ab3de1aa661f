#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bouncer/cli.hpp"

using namespace bouncer;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string l;
  while (std::getline(in, l)) lines.push_back(l);
  return lines;
}

}  // namespace

TEST_CASE("spectrum table in CSV") {
  auto r = run_cli({"spectrum", "--lambda", "0", "--n-max", "7"});
  REQUIRE(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "n,zeta,E_peV");
  double n, zeta, e;
  REQUIRE(std::sscanf(lines[1].c_str(), "%lf,%lf,%lf", &n, &zeta, &e) == 3);
  CHECK(n == 1.0);
  CHECK(zeta == doctest::Approx(-2.338107410).epsilon(1e-9));
  CHECK(e == doctest::Approx(1.40655).epsilon(1e-4));
  REQUIRE(std::sscanf(lines[7].c_str(), "%lf,%lf,%lf", &n, &zeta, &e) == 3);
  CHECK(e == doctest::Approx(6.0400).epsilon(1e-3));
}

TEST_CASE("spectrum near the Neumann wall") {
  auto r = run_cli({"spectrum", "--lambda", "1e9", "--n-max", "1"});
  REQUIRE(r.code == 0);
  double n, zeta, e;
  REQUIRE(std::sscanf(lines_of(r.out)[1].c_str(), "%lf,%lf,%lf", &n, &zeta, &e) == 3);
  CHECK(zeta == doctest::Approx(-1.01879).epsilon(1e-5));
  auto rn = run_cli({"spectrum", "--neumann", "--n-max", "1"});
  REQUIRE(rn.code == 0);
}

TEST_CASE("byte-identical output for identical invocations") {
  auto a = run_cli({"spectrum", "--lambda", "0.11928", "--n-max", "7"});
  auto b = run_cli({"spectrum", "--lambda", "0.11928", "--n-max", "7"});
  CHECK(a.out == b.out);
  auto c = run_cli({"--format", "json", "sweep", "--observable", "bound:1",
                    "--lambda-min", "0", "--lambda-max", "1", "--steps", "5"});
  auto d = run_cli({"--format", "json", "sweep", "--observable", "bound:1",
                    "--lambda-min", "0", "--lambda-max", "1", "--steps", "5"});
  CHECK(c.out == d.out);
}

TEST_CASE("JSON output carries meta and rows") {
  auto r = run_cli({"--format", "json", "spectrum", "--lambda", "0", "--n-max", "2"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["meta"]["command"] == "spectrum");
  CHECK(doc["meta"]["config_hash"].is_string());
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["n"] == 1);
}

TEST_CASE("fit command") {
  auto r = run_cli({"fit", "--nu", "972.842", "--sigma", "0.0456057",
                    "--transition", "1:6"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  double lam = doc["lambda_min"].get<double>();
  CHECK(lam > 0.105);
  CHECK(lam < 0.125);
  CHECK(doc["chi2_min"].get<double>() < 1e-6);
  CHECK(doc["delta_lambda"].get<double>() > 0.0);
  CHECK(doc["converged"].get<bool>());
}

TEST_CASE("sweep observables") {
  auto r = run_cli({"sweep", "--observable", "transition:1:6", "--lambda-min", "0",
                    "--lambda-max", "1", "--steps", "21"});
  REQUIRE(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 22);
  double prev = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    double lam, v;
    REQUIRE(std::sscanf(lines[i].c_str(), "%lf,%lf", &lam, &v) == 2);
    CHECK(v >= prev);  // gap dilation is monotone in the wall softness
    prev = v;
  }

  auto r2 = run_cli({"sweep", "--observable", "transition:1:2", "--lambda-min", "0",
                     "--lambda-max", "1", "--steps", "2"});
  double lam, v;
  REQUIRE(std::sscanf(lines_of(r2.out)[1].c_str(), "%lf,%lf", &lam, &v) == 2);
  CHECK(v == doctest::Approx(254.5336).epsilon(1e-4));

  auto r3 = run_cli({"sweep", "--observable", "bound:1", "--lambda-min", "0",
                     "--lambda-max", "1", "--steps", "2"});
  REQUIRE(std::sscanf(lines_of(r3.out)[1].c_str(), "%lf,%lf", &lam, &v) == 2);
  CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("other subcommands smoke") {
  CHECK(run_cli({"eigenfunction", "--lambda", "0.11928", "--n", "1", "--steps", "16"})
            .code == 0);
  CHECK(run_cli({"elements", "--lambda", "0.11928", "--n", "1", "--k", "2", "--q",
                 "4"}).code == 0);
  CHECK(run_cli({"sumrule", "--kind", "trk", "--lambda", "0", "--n", "1", "--m-max",
                 "300"}).code == 0);
  CHECK(run_cli({"uncertainty", "--lambda", "0.11928", "--n", "1"}).code == 0);
  CHECK(run_cli({"penetration", "--lambda", "0.11928", "--n", "1"}).code == 0);
  CHECK(run_cli({"extract-g", "--nu", "972.842", "--transition", "1:6"}).code == 0);
  CHECK(run_cli({"phase-map", "--theta-steps", "4", "--eps-steps", "2"}).code == 0);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"spectrum", "--n-max", "-3"}).code == 1);
  CHECK(run_cli({"fit", "--nu", "972.8"}).code == 1);  // missing sigma
  CHECK(run_cli({"sweep", "--observable", "nonsense:1"}).code == 1);
  CHECK(run_cli({"fit", "--nu", "972.8", "--sigma", "0.05", "--transition",
                 "6:1"}).code == 1);
  auto r = run_cli({"frobnicate"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("numerical failures exit with code 2") {
  CHECK(run_cli({"penetration", "--lambda", "3.0", "--n", "1"}).code == 2);
  CHECK(run_cli({"fit", "--nu", "2000", "--sigma", "0.01"}).code == 2);
}

TEST_CASE("config file: constants override and unknown-key rejection") {
  const char* path = "/tmp/bouncer_test_config.json";
  {
    std::ofstream f(path);
    f << "{\"g\": 19.60985, \"precision\": 12}\n";
  }
  auto r = run_cli({"--config", path, "spectrum", "--lambda", "0", "--n-max", "1"});
  REQUIRE(r.code == 0);
  double n, zeta, e;
  REQUIRE(std::sscanf(lines_of(r.out)[1].c_str(), "%lf,%lf,%lf", &n, &zeta, &e) == 3);
  CHECK(e == doctest::Approx(std::cbrt(4.0) * 1.40655).epsilon(1e-4));

  {
    std::ofstream f(path);
    f << "{\"gee\": 9.8}\n";
  }
  auto bad = run_cli({"--config", path, "spectrum", "--lambda", "0"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("gee") != std::string::npos);

  {
    std::ofstream f(path);
    f << "{\"format\": \"xml\"}\n";
  }
  CHECK(run_cli({"--config", path, "spectrum", "--lambda", "0"}).code == 1);
  std::remove(path);
}

TEST_CASE("precision flag shapes CSV output") {
  auto lo = run_cli({"--precision", "4", "spectrum", "--lambda", "0", "--n-max", "1"});
  auto hi = run_cli({"--precision", "15", "spectrum", "--lambda", "0", "--n-max", "1"});
  CHECK(lines_of(lo.out)[1].size() < lines_of(hi.out)[1].size());
  CHECK(lines_of(lo.out)[1] == "1,-2.338,1.407");
}

TEST_CASE("verification suite passes clean and catches injected root errors") {
  auto checks = cli::run_verification();
  CHECK(checks.size() >= 10);
  for (const auto& c : checks) {
    INFO(c.name, " residual=", c.residual, " tol=", c.tolerance);
    CHECK(c.pass);
  }
  auto tampered = cli::run_verification(1e-6);
  bool any_failed = false;
  for (const auto& c : tampered) any_failed = any_failed || !c.pass;
  CHECK(any_failed);
}
