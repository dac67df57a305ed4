#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lsi/cli.hpp"
#include "lsi/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = lsi::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("passing invocations exit zero and report every check") {
  const RunResult alg = run_cli({"verify", "algebra", "--id", "sch", "--dim", "1"});
  CHECK(alg.code == 0);
  CHECK(alg.err.empty());
  CHECK(alg.out.find("PASS structure sch(d=1)") != std::string::npos);
  CHECK(alg.out.find("PASS jacobi sch(d=1)") != std::string::npos);
  CHECK(alg.out.find("FAIL") == std::string::npos);

  const RunResult ward =
      run_cli({"verify", "ward", "--case", "fixed-mass-symmetric", "--branch", "t>0"});
  CHECK(ward.code == 0);
  CHECK(ward.out.find("PASS covariance fixed-mass-symmetric [t>0]") != std::string::npos);

  const RunResult integ =
      run_cli({"causality", "integral", "--n", "0", "--x", "1.5", "--half-plane", "below"});
  CHECK(integ.code == 0);
  CHECK(integ.out.find("PASS integral below n=0 x=1.5") != std::string::npos);

  const RunResult resp = run_cli({"response", "collapse"});
  CHECK(resp.code == 0);
  CHECK(resp.out.find("PASS collapse-residual  residual=0.0") != std::string::npos);
}

TEST_CASE("bindings substitute exact rationals into symbolic cases") {
  // ordinary pair: every weight is free of Jordan sources and may be pinned
  const RunResult pair =
      run_cli({"verify", "ward", "--case", "dual-cga-pair", "--bind", "x1=1/2", "--bind",
               "x2=1/3", "--bind", "xi1=2", "--bind", "xi2=-1/3", "--bind", "f0=5"});
  CHECK(pair.code == 0);
  CHECK(pair.out.find("PASS") != std::string::npos);

  const RunResult mass = run_cli({"verify", "ward", "--case", "fixed-mass-symmetric", "--branch",
                                  "t>0", "--bind", "M1=2", "--bind", "g0=3/2"});
  CHECK(mass.code == 0);

  // weights that feed a Jordan source cannot be instantiated up front
  const RunResult frozen = run_cli({"verify", "ward", "--case", "log-sch-dual-symmetric",
                                    "--branch", "t>0", "--bind", "x=1/2"});
  CHECK(frozen.code == 2);
  CHECK(frozen.err.find("weight derivative") != std::string::npos);
}

TEST_CASE("corrupted generators flip the exit code to one") {
  const RunResult alg = run_cli({"verify", "algebra", "--id", "cga", "--mutate"});
  CHECK(alg.code == 1);
  CHECK(alg.out.find("FAIL structure cga(d=1)") != std::string::npos);

  const RunResult charges =
      run_cli({"verify", "algebra", "--id", "two-charge-virasoro", "--mutate"});
  CHECK(charges.code == 1);
  CHECK(charges.out.find("FAIL central-charges two-charge-virasoro") != std::string::npos);

  const RunResult ward = run_cli({"verify", "ward", "--case", "nonlog-sch", "--mutate"});
  CHECK(ward.code == 1);
  CHECK(ward.out.find("FAIL covariance nonlog-sch") != std::string::npos);

  const RunResult sym = run_cli({"verify", "symmetry", "--id", "dual-cga", "--mutate"});
  CHECK(sym.code == 1);
}

TEST_CASE("usage and configuration problems exit with code two") {
  const std::vector<std::vector<std::string>> bad = {
      {"bogus"},
      {"verify"},
      {"verify", "algebra", "--id", "nope"},
      {"verify", "algebra", "--id", "ecga", "--dim", "1"},
      {"verify", "algebra", "--window", "2..nope"},
      {"verify", "ward", "--case", "nope"},
      {"verify", "ward", "--case", "nonlog-sch", "--branch", "t=0"},
      {"verify", "ward", "--bind", "x1=0.5"},
      {"verify", "ward", "--bind", "x1"},
      {"verify", "ward", "--bind", "x1=1/0"},
      {"verify", "constraints", "--case", "nope"},
      {"causality", "integral", "--half-plane", "sideways"},
      {"causality", "integral", "--n", "2"},
      {"causality", "integral", "--bind", "tolerance=1/2"},
      {"causality", "dualize", "--t", "0"},
      {"causality", "dualize", "--entry", "Q"},
      {"causality", "report", "--bind", "x=huh"},
      {"response", "collapse", "--bind", "z=0"},
      {"verify", "algebra", "--format", "yaml"},
      {"verify", "algebra", "--format", "csv"},  // csv is grid-only
  };
  for (const auto& args : bad) {
    const RunResult r = run_cli(args);
    CAPTURE(args.front());
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
  }
}

TEST_CASE("json output is deterministic modulo wall time") {
  const std::vector<std::string> args = {"verify",      "constraints", "--case",
                                         "f-weight-match", "--format",    "json"};
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);

  lsi::ordered_json ja = lsi::ordered_json::parse(a.out);
  lsi::ordered_json jb = lsi::ordered_json::parse(b.out);
  CHECK(ja.contains("wall_ms"));
  ja.erase("wall_ms");
  jb.erase("wall_ms");
  CHECK(ja.dump() == jb.dump());

  CHECK(ja["command"] == "verify constraints");
  CHECK(ja["passed"] == true);
  CHECK(ja["checks"].size() == 1);
  CHECK(ja["checks"][0]["status"] == "pass");
}

TEST_CASE("numeric json reports carry values with error estimates") {
  const RunResult r = run_cli({"causality", "integral", "--n", "1", "--x", "0.8", "--half-plane",
                               "above", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = lsi::ordered_json::parse(r.out);
  const auto& detail = j["checks"][0]["detail"];
  CHECK(detail.contains("re"));
  CHECK(detail.contains("im"));
  CHECK(detail.contains("err"));
  CHECK(detail["cross_scheme_gap"].get<double>() < 1e-8);
}

TEST_CASE("the dualization grid serializes task, grid, and aggregates") {
  const RunResult r = run_cli({"causality", "report", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = lsi::ordered_json::parse(r.out);
  const auto& checks = j["checks"];
  const auto& last = checks[checks.size() - 1];
  REQUIRE(last["name"] == "dualization-grid");
  const auto& detail = last["detail"];
  CHECK(detail["task"]["x"] == 0.8);
  CHECK(detail["grid"].size() == 32);
  for (const char* key : {"t", "r", "g", "h", "trusted"}) CHECK(detail["grid"][0].contains(key));
  CHECK(detail["aggregates"]["trusted_points"] == 32);
  CHECK(detail["aggregates"]["skipped_points"] == 0);
}

TEST_CASE("csv format emits one grid row per point") {
  const RunResult r = run_cli({"causality", "report", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  REQUIRE(std::getline(in, line));
  CHECK(line == "t,r,g_re,g_im,g_err,h_re,h_im,h_err,trusted");
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 32);
}

TEST_CASE("--out writes the report to a file instead of the stream") {
  const std::string path = "cli_out_test.json";
  const RunResult r = run_cli({"verify", "symmetry", "--id", "age", "--format", "json", "--out",
                               path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  const auto j = lsi::ordered_json::parse(buf.str());
  CHECK(j["command"] == "verify symmetry");
  CHECK(j["checks"].size() == 5);
  f.close();
  std::remove(path.c_str());
}

TEST_CASE("help requests succeed without running checks") {
  const RunResult top = run_cli({"--help"});
  CHECK(top.code == 0);
  CHECK(top.out.find("Usage") != std::string::npos);

  const RunResult sub = run_cli({"verify", "--help"});
  CHECK(sub.code == 0);
}

TEST_CASE("dualize trusts tight error estimates and degrades gracefully") {
  const RunResult ok = run_cli({"causality", "dualize", "--t", "1", "--r", "0.5", "--entry", "H",
                                "--bind", "x=0.8", "--bind", "xi_sum=0.3", "--format", "json"});
  REQUIRE(ok.code == 0);
  const auto j = lsi::ordered_json::parse(ok.out);
  CHECK(j["checks"][0]["status"] == "pass");

  // a starved contour cannot certify the default tolerance
  const RunResult warn = run_cli({"causality", "dualize", "--t", "-1", "--r", "0", "--tail-depth",
                                  "6", "--bind", "tolerance=1e-12"});
  CHECK(warn.code == 1);
}
