#include "doctest.h"
#include "json.hpp"
#include "thhcalc/errors.hpp"
#include "thhcalc/models.hpp"
#include "thhcalc/report.hpp"
#include "thhcalc/scenarios.hpp"
#include "thhcalc/serialization.hpp"

#include <fstream>
#include <sstream>

using namespace thhcalc;
using nlohmann::json;

namespace {
std::string read_example() {
  std::ifstream in(std::string(THHCALC_SOURCE_DIR) + "/docs/scenarios/thhz.json");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}
}  // namespace

TEST_CASE("catalog lists every scenario once") {
  const auto& cat = scenario_catalog();
  for (const char* name : {"thhz", "thh-ell-log", "thh-ku-basechange", "thh-ku-ss", "ausoni", "les-ell",
                           "les-ku", "suspension", "tor-oracle", "inputs"}) {
    CHECK_MESSAGE(std::count_if(cat.begin(), cat.end(), [&](const ScenarioInfo& s) { return s.name == name; }) == 1,
                  name);
  }
  CHECK(default_cap(3) == 30);
  CHECK(default_cap(5) == 70);
}

TEST_CASE("thhz at p = 3, cap 54") {
  auto r = run_scenario("thhz", 3, 54);
  CHECK(r.passed());
  CHECK(r.warnings.empty());
  for (const auto& c : r.checks) CHECK_MESSAGE(c.status == Status::Pass, c.name);
}

TEST_CASE("suspension at p = 5, cap 60") {
  auto r = run_scenario("suspension", 5, 60);
  CHECK(r.passed());
  for (const auto& c : r.checks) CHECK_MESSAGE(c.status == Status::Pass, c.name);
}

TEST_CASE("small caps are flagged conditional") {
  auto r = run_scenario("thhz", 3, 4);
  REQUIRE_FALSE(r.warnings.empty());
  CHECK(r.warnings.front().find("CapTooSmall") != std::string::npos);
  for (const auto& c : r.checks) CHECK(c.status != Status::Pass);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("catalog passes at p = 3 and p = 5") {
  for (std::uint32_t p : {3u, 5u}) {
    for (const auto& r : run_all(p)) {
      CHECK_MESSAGE(r.passed(), r.scenario << " at p = " << p);
      for (const auto& c : r.checks) {
        const bool conditional_ok = p == 3 && c.status == Status::Conditional;
        CHECK_MESSAGE((c.status == Status::Pass || conditional_ok), r.scenario << ": " << c.name);
      }
    }
  }
}

TEST_CASE("scenario errors") {
  CHECK(code_of([] { run_scenario("nosuch", 3); }) == ErrorCode::UnknownScenario);
  CHECK(code_of([] { run_scenario("thhz", 9); }) == ErrorCode::InvalidPrime);
  CHECK(code_of([] { format_from_string("xml"); }) == ErrorCode::ParseError);
}

TEST_CASE("json reports") {
  Report empty;
  auto doc = json::parse(emit_report(empty, Format::Json));
  CHECK(doc.at("checks").is_array());
  CHECK(doc.at("checks").empty());

  auto r = run_scenario("thhz", 3, 30);
  const auto text = emit_report(r, Format::Json);
  CHECK(text == emit_report(run_scenario("thhz", 3, 30), Format::Json));
  auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"scenario", "prime", "cap", "checks", "warnings"});
  for (const auto& c : j.at("checks")) CHECK(c.at("status") == "pass");

  CHECK(emit_report(r, Format::Text).find("result: pass") != std::string::npos);
}

TEST_CASE("scenario file example passes and a broken copy fails") {
  const auto text = read_example();
  auto r = run_scenario_file(text);
  CHECK(r.passed());
  CHECK(r.scenario == "thhz-data");

  auto doc = json::parse(text);
  doc["differentials"] = json::array();
  doc.erase("family");
  auto bad = run_scenario_file(doc.dump());
  CHECK_FALSE(bad.passed());
  auto j = json::parse(emit_report(bad, Format::Json));
  bool listed = false;
  for (const auto& c : j.at("checks"))
    if (c.at("status") == "fail")
      for (const auto& d : c.at("degrees"))
        if (d.at("expected") != d.at("actual")) listed = true;
  CHECK(listed);
  CHECK(code_of([] { run_scenario_file("{not json"); }) == ErrorCode::ParseError);
}

TEST_CASE("serialization round trips") {
  PrimeField f(5);
  auto spec = models::thh_ku_log(f);
  auto back = algebra_from_json(f, algebra_to_json(spec));
  CHECK(back.generators() == spec.generators());
  auto e = add(spec, product_of(spec, {{"u", 2}, {"kappa1", 3}}), scale(spec, gen(spec, "lambda1"), 4));
  auto e2 = element_from_json(back, element_to_json(spec, e));
  CHECK(element_to_json(back, e2) == element_to_json(spec, e));

  auto theta = make_theta(f);
  auto pt = presentation_from_json(f, presentation_to_json(theta));
  CHECK(pt.rules().size() == theta.rules().size());
  CHECK(hilbert_pres(pt, 80) == hilbert_pres(theta, 80));
}
