#include "doctest.h"

#include "hcyc/scenario/scenario.hpp"

#include <fstream>
#include <sstream>

using namespace hcyc;
using namespace hcyc::scenario;
using json = nlohmann::ordered_json;

namespace {

std::string src(const std::string& rel) { return std::string(HCYC_SOURCE_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const json& task_body_homology(const ReportDocument& r, int task, const std::string& theory, json& out) {
  json full = json::parse(emit(r, Format::Json));
  for (auto& h : full["tasks"][task]["homology"])
    if (h["theory"] == theory) out = h;
  return out;
}

}  // namespace

TEST_CASE("bundled scenarios parse") {
  ScenarioDocument t = parse_scenario_file(src("scenarios/trivial.json"));
  CHECK(t.hopf_algebroids.size() == 1);
  CHECK(t.tasks.size() == 2);
  ScenarioDocument p = parse_scenario_file(src("scenarios/pair_e2.json"));
  CHECK(p.measurings.count("euler") == 1);
  CHECK(p.hopf_algebroids.at("U")->d() == 4);
}

TEST_CASE("dangling references name the reference") {
  try {
    parse_scenario_file(src("tests/data/dangling.json"));
    FAIL("expected ReferenceError");
  } catch (const ReferenceError& e) {
    CHECK(std::string(e.what()).find("missing_measuring") != std::string::npos);
  }
  json j = json::parse(slurp(src("scenarios/pair_e2.json")));
  j["objects"]["measurings"]["euler"]["src"] = "V";
  try {
    parse_scenario(j);
    FAIL("expected ReferenceError");
  } catch (const ReferenceError& e) {
    CHECK(std::string(e.what()).find("'V'") != std::string::npos);
  }
}

TEST_CASE("malformed input") {
  json j = json::parse(slurp(src("scenarios/trivial.json")));
  j["objects"]["hopf_algebroids"]["k"]["s"]["rows"] = 2;
  CHECK_THROWS_AS(parse_scenario(j), scenario::DimensionMismatch);
  json k = json::parse(slurp(src("scenarios/trivial.json")));
  k["tasks"][0]["kind"] = "bogus";
  CHECK_THROWS_AS(parse_scenario(k), ParseError);
  json d = json::parse(slurp(src("scenarios/trivial.json")));
  d["objects"]["hopf_algebroids"]["k"]["eps"]["entries"][0][3] = 5;
  ParseOptions f5;
  f5.field = FieldSpec::prime(5);
  CHECK_THROWS_AS(parse_scenario(d, f5), ParseError);
}

TEST_CASE("trivial scenario reports the point-module dims") {
  ReportDocument r = run(parse_scenario_file(src("scenarios/trivial.json")));
  REQUIRE(r.tasks.size() == 2);
  CHECK(r.failed() == 0);
  json hc, hh;
  task_body_homology(r, 1, "HC", hc);
  task_body_homology(r, 1, "HH", hh);
  // constant cyclic object k: b alternates between 0 and the identity
  CHECK(hh["dims"] == json::array({1, 0, 0, 0}));
  CHECK(hc["dims"] == json::array({1, 0, 1, 0}));
}

TEST_CASE("over F_5 the HC request errors and the other task still runs") {
  ReportDocument r = run(parse_scenario_file(src("scenarios/trivial.json"), {FieldSpec::prime(5)}));
  REQUIRE(r.tasks.size() == 2);
  CHECK(r.tasks[0].status == "pass");
  CHECK(r.tasks[1].status == "error");
  json hc;
  task_body_homology(r, 1, "HC", hc);
  CHECK(hc["error"]["type"] == "CharNotZero");
}

TEST_CASE("pair scenario passes every check") {
  ReportDocument r = run(parse_scenario_file(src("scenarios/pair_e2.json")));
  for (auto& t : r.tasks) CHECK_MESSAGE(t.status == "pass", t.index);
  json full = json::parse(emit(r, Format::Json));
  bool squares = false;
  for (auto& t : full["tasks"])
    for (auto& c : t["checks"])
      if (c["subject"].get<std::string>().find("Hopf-Galois") != std::string::npos) squares = true;
  CHECK(squares);
}

TEST_CASE("report emission") {
  CHECK(emit(ReportDocument{}, Format::Json) == R"({"version":1,"tasks":[]})");
  ReportDocument r = run(parse_scenario_file(src("scenarios/trivial.json")));
  std::string text = emit(r, Format::Text);
  CHECK(text.find("2 tasks: 2 passed, 0 failed") != std::string::npos);
}

TEST_CASE("deterministic output matching the golden files") {
  for (std::string s : {"trivial", "pair_e2"}) {
    ScenarioDocument doc = parse_scenario_file(src("scenarios/" + s + ".json"));
    std::string a = emit(run(doc), Format::Json, true), b = emit(run(doc), Format::Json, true);
    RunOptions par;
    par.parallel = true;
    std::string c = emit(run(doc, par), Format::Json, true);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a == slurp(src("tests/golden/" + s + ".json")));
  }
}

TEST_CASE("verbs select task kinds") {
  ScenarioDocument doc = parse_scenario_file(src("scenarios/pair_e2.json"));
  RunOptions o;
  o.kinds = kinds_for_verb("measure");
  ReportDocument r = run(doc, o);
  for (auto& t : r.tasks) CHECK((t.kind == "measure" || t.kind == "shuffle"));
  CHECK(r.tasks.size() == 3);
  CHECK_THROWS(kinds_for_verb("plot"));
}

TEST_CASE("scenario round trip") {
  for (std::string s : {"scenarios/trivial.json", "scenarios/pair_e2.json", "tests/data/gallery.json"}) {
    ScenarioDocument doc = parse_scenario_file(src(s));
    json once = emit_scenario(doc);
    ScenarioDocument again = parse_scenario(once);
    CHECK(emit_scenario(again) == once);
    CHECK(emit(run(doc), Format::Json) == emit(run(again), Format::Json));
  }
}

TEST_CASE("gallery scenario covers every object kind") {
  ScenarioDocument doc = parse_scenario_file(src("tests/data/gallery.json"));
  ReportDocument r = run(doc);
  for (auto& t : r.tasks) CHECK_MESSAGE(t.status == "pass", t.index);
  json hc;
  task_body_homology(r, 8, "HC", hc);
  CHECK(hc["dims"] == json::array({1, 0, 1, 0}));
  json lr;
  task_body_homology(r, 5, "LR", lr);
  CHECK(lr["dims"] == json::array({1, 1, 0}));
}
