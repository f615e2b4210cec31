#include "doctest.h"

#include <coxbip/catalog.hpp>
#include <coxbip/error.hpp>
#include <coxbip/report.hpp>

#include "../support/fixtures.hpp"

using namespace coxbip;

TEST_CASE("catalog") {
  auto names = catalog_names();
  CHECK(names.size() == 10);
  for (const auto& n : fx::fixture_names()) CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(catalog_source("nope"), InvalidArgument);
  CHECK(load_input("catalog:grid") == fx::cat("grid"));
  CHECK_THROWS_AS(load_input("/nonexistent/file.json"), Error);
}

TEST_CASE("report JSON round-trips losslessly") {
  for (const auto& name : fx::fixture_names()) {
    auto m = fx::cat(name.c_str());
    for (bool all : {false, true}) {
      AnalysisReport r = analyze(m, "catalog:" + name, all);
      std::string text = report_to_json(r);
      AnalysisReport back = report_from_json(text);
      CAPTURE(name);
      CHECK(back == r);
      CHECK(report_to_json(back) == text);
    }
  }
}

TEST_CASE("report with census entries round-trips") {
  auto m = fx::cat("affine-A2");
  WordEngine e(m);
  AnalysisReport r = analyze(m, "catalog:affine-A2");
  CensusOptions o;
  o.k = 1;
  o.radius = 6;
  r.census.push_back({"s1", pole_census(e, require_reflection(e, e.generator(0)), o)});
  WordEngine fe(fx::cat("finite-A2"));
  r.census.push_back({"s", pole_census(fe, require_reflection(fe, fe.generator(0)), o)});
  CHECK(report_from_json(report_to_json(r)) == r);
  CHECK(census_from_json(census_to_json(r.census[0].report)) == r.census[0].report);
}

TEST_CASE("report output is deterministic and versioned") {
  auto m = fx::cat("example-fig2");
  std::string a = report_to_json(analyze(m, "x", true));
  std::string b = report_to_json(analyze(m, "x", true));
  CHECK(a == b);
  CHECK(a.find("\"schema_version\": \"1.0.0\"") != std::string::npos);
  CHECK(a.find("\"seed\"") != std::string::npos);
}

TEST_CASE("report parse errors") {
  CHECK_THROWS_AS(report_from_json("{"), ParseError);
  CHECK_THROWS_AS(report_from_json(R"({"schema_version": "0.1"})"), ParseError);
  std::string good = report_to_json(analyze(fx::cat("grid"), "g"));
  auto bad = good;
  bad.replace(bad.find("\"failed_condition\": \"none\""), 26, "\"failed_condition\": \"q\"");
  try {
    report_from_json(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.where() == "/verdict/failed_condition");
  }
}

TEST_CASE("DOT rendering") {
  std::string dot = diagram_to_dot(fx::cat("example-fig2"));
  for (int k = 1; k <= 6; ++k) CHECK(dot.find("\"s" + std::to_string(k) + "\";") != std::string::npos);
  CHECK(dot.find("\"s1\" -- \"s2\" [label=\"4\"]") != std::string::npos);
  CHECK(dot.find("\"s2\" -- \"s6\"") == std::string::npos);
  std::string a2 = diagram_to_dot(fx::cat("affine-A2"));
  CHECK(a2.find("style=bold") != std::string::npos);
}
