#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "potlab/errors.hpp"
#include "potlab/scenario.hpp"

using namespace potlab;
using nlohmann::json;

namespace {

bool mentions(const std::vector<std::string>& diags, const std::string& needle) {
  return std::any_of(diags.begin(), diags.end(), [&](const std::string& d) {
    return d.find(needle) != std::string::npos;
  });
}

json decide_scenario() {
  return json{{"version", 1},
              {"kind", "decide1d"},
              {"p", 2.0},
              {"omega", json::array({{{"lo", "0"}, {"hi", "2"}}})},
              {"e", json::array({{{"lo", "1"}, {"hi", "2"}}})}};
}

}  // namespace

TEST_CASE("csv encoding is RFC-4180 with CRLF") {
  CHECK(csv_row({"a", "b"}) == "a,b\r\n");
  CHECK(csv_row({"a,b", "c\"d"}) == "\"a,b\",\"c\"\"d\"\r\n");
  CHECK(csv_num(0.5) == "0.5");
  CHECK(csv_num(1.0 / 0.0) == "inf");
  CHECK(csv_num(-1.0 / 0.0) == "-inf");
}

TEST_CASE("validate: diagnostics for malformed scenarios") {
  json sc = decide_scenario();
  sc.erase("version");
  CHECK(mentions(validate_scenario(sc), "version"));

  sc = decide_scenario();
  sc["version"] = 2;
  CHECK(mentions(validate_scenario(sc), "version"));

  sc = decide_scenario();
  sc["kind"] = "frobnicate";
  CHECK(mentions(validate_scenario(sc), "unknown kind"));

  sc = decide_scenario();
  sc["e"] = json::array({{{"lo", "5"}, {"hi", "6"}}});  // outside omega
  CHECK_FALSE(validate_scenario(sc).empty());

  sc = decide_scenario();
  sc["weight"] = "table does-not-exist.csv";
  CHECK_FALSE(validate_scenario(sc).empty());

  sc = decide_scenario();
  sc.erase("p");
  CHECK(mentions(validate_scenario(sc), "missing field: p"));

  CHECK(validate_scenario(decide_scenario()).empty());
}

TEST_CASE("run: decide1d verdict and witness table") {
  const ScenarioResult res = run_scenario(decide_scenario());
  CHECK(res.exit_code == 0);
  CHECK(res.verdict["removable"] == true);
  CHECK(res.verdict["status"] == "removable");
  CHECK(res.verdict["C"].get<double>() == doctest::Approx(2.0));
  CHECK(res.csv.rfind("x,witness\r\n", 0) == 0);

  // Byte-identical output across runs.
  const ScenarioResult again = run_scenario(decide_scenario());
  CHECK(again.csv == res.csv);
  CHECK(again.verdict.dump() == res.verdict.dump());
}

TEST_CASE("run: decide1d non-removable emits a witness") {
  json sc{{"version", 1},
          {"kind", "decide1d"},
          {"p", 2.0},
          {"omega", json::array({{{"lo", "0"}, {"hi", "5"}}})},
          {"e", json::array({{{"lo", "2"}, {"hi", "3"}}})}};
  const ScenarioResult res = run_scenario(sc);
  CHECK(res.exit_code == 0);
  CHECK(res.verdict["removable"] == false);
  CHECK(res.verdict["status"] == "non-removable-disconnected");
  // Witness rows beyond the header.
  CHECK(std::count(res.csv.begin(), res.csv.end(), '\n') > 1);
}

TEST_CASE("run: fq table values") {
  json sc{{"version", 1}, {"kind", "fq"}, {"p", 2.0}, {"Q", 2.0},
          {"xs", json::array({3.0, "10"})}};
  const ScenarioResult res = run_scenario(sc);
  REQUIRE(res.exit_code == 0);
  const auto& rows = res.verdict["results"];
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["bound"].get<double>() ==
        doctest::Approx(-3.0 + std::sqrt(18.0)).epsilon(1e-6));
  CHECK(rows[0]["infeasible"] == false);
  CHECK(res.csv.rfind("x,bound,infeasible\r\n", 0) == 0);
}

TEST_CASE("run: parabolic lattice") {
  json cases = json::array();
  for (int d : {2, 3}) {
    for (double p : {1.5, 3.0}) cases.push_back({{"d", d}, {"p", p}});
  }
  json sc{{"version", 1}, {"kind", "parabolic"}, {"cases", cases}};
  const ScenarioResult res = run_scenario(sc);
  REQUIRE(res.exit_code == 0);
  const auto& rows = res.verdict["results"];
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    const bool want = row["p"].get<double>() >= row["d"].get<double>();
    CHECK(row["parabolic"] == (want ? "true" : "false"));
  }

  json single{{"version", 1}, {"kind", "parabolic"}, {"d", 2.0}, {"p", 2.0}};
  CHECK(run_scenario(single).verdict["parabolic"] == true);
}

TEST_CASE("run: quasi1d reports the updated constant") {
  json sc{{"version", 1},
          {"kind", "quasi1d"},
          {"p", 2.0},
          {"Q", 1.0},
          {"omega", json::array({{{"lo", "-1"}, {"hi", "1"}}})},
          {"e", json::array({{{"lo", "-1"}, {"hi", "0"}}})},
          {"u", {{"slope", 1.0}, {"intercept", 0.0}}}};
  const ScenarioResult res = run_scenario(sc);
  REQUIRE(res.exit_code == 0);
  CHECK(res.verdict["Qprime"].get<double>() == doctest::Approx(2.0));
  CHECK(res.verdict["reflections_used"] == 1);
}

TEST_CASE("run: verdict cases") {
  json whole = {{"kind", "whole-space"}};
  json origin = {{"kind", "point"}, {"x", {0.0, 0.0}}};
  json sc{{"version", 1}, {"kind", "verdict"}, {"mode", "unweighted"},
          {"n", 2},       {"p", 2.0},          {"omega_set", whole},
          {"e_set", origin}};
  const ScenarioResult res = run_scenario(sc);
  REQUIRE(res.exit_code == 0);
  CHECK(res.verdict["removable"] == "yes");
  CHECK(res.verdict["clause"] == "capacity-zero");

  json weighted{{"version", 1},
                {"kind", "verdict"},
                {"mode", "weighted"},
                {"n", 2},
                {"p", 3.0},
                {"growth", {{"d", 2.0}}},
                {"omega_set", whole},
                {"e_set", origin},
                {"facts", {{"cap_e", "positive"}}}};
  CHECK(run_scenario(weighted).verdict["removable"] == "yes-degenerate");

  json super{{"version", 1}, {"kind", "verdict"}, {"mode", "superharmonic"},
             {"facts", {{"cap_e", "zero"}}}};
  CHECK(run_scenario(super).verdict["removable"] == "yes");
}

TEST_CASE("exit code 1: invalid scenarios never throw") {
  json sc = decide_scenario();
  sc["kind"] = "nope";
  const ScenarioResult res = run_scenario(sc);
  CHECK(res.exit_code == 1);
  CHECK(res.verdict.contains("error"));

  // Runtime input error (bad fact label) also maps to 1.
  json bad{{"version", 1}, {"kind", "verdict"}, {"mode", "superharmonic"},
           {"facts", {{"cap_e", "maybe"}}}};
  CHECK(run_scenario(bad).exit_code == 1);
}

TEST_CASE("exit code 2: domain failures are encoded, not thrown") {
  // An interior removed piece disconnects the complement, so the reflection
  // extension refuses: a domain failure, not an input one.
  json sc{{"version", 1},
          {"kind", "quasi1d"},
          {"p", 2.0},
          {"Q", 1.0},
          {"omega", json::array({{{"lo", "0"}, {"hi", "5"}}})},
          {"e", json::array({{{"lo", "2"}, {"hi", "3"}}})},
          {"u", {{"slope", 1.0}, {"intercept", 0.0}}}};
  const ScenarioResult res = run_scenario(sc);
  CHECK(res.exit_code == 2);
  CHECK(res.verdict.contains("error"));
}

TEST_CASE("scenario file loading") {
  const std::string path = "potlab_test_scenario.json";
  {
    std::ofstream out(path);
    out << decide_scenario().dump();
  }
  const json sc = load_scenario(path);
  CHECK(sc["kind"] == "decide1d");
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_scenario("no-such-file.json"), InputError);
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_scenario(path), InputError);
  std::remove(path.c_str());
}

TEST_CASE("dispatch table covers every public operation surface") {
  const auto& dispatch = scenario_dispatch();
  REQUIRE(dispatch.size() == 9);
  const std::vector<std::string> must_reach = {
      "decide_removable_1d", "weak_extend", "extend_quasi_1d", "f_q_bound",
      "variational_capacity", "null_capacity_trend", "parabolicity",
      "dirichlet_solve", "max_principle_check", "quasimin_spot_check",
      "harnack_ratio", "removability_experiment", "classify_unweighted",
      "classify_weighted", "classify_superharmonic", "structural_capacity"};
  for (const auto& op : must_reach) {
    const bool found = std::any_of(
        dispatch.begin(), dispatch.end(), [&](const auto& entry) {
          return std::find(entry.second.begin(), entry.second.end(), op) !=
                 entry.second.end();
        });
    CAPTURE(op);
    CHECK(found);
  }
}

TEST_CASE("all demos validate and run clean") {
  for (const std::string& name : demo_names()) {
    CAPTURE(name);
    const json sc = demo_scenario(name);
    CHECK(validate_scenario(sc).empty());
    const ScenarioResult res = run_scenario(sc);
    CHECK(res.exit_code == 0);
    CHECK_FALSE(res.csv.empty());
  }
  CHECK_THROWS_AS(demo_scenario("no-such-demo"), InputError);
}
