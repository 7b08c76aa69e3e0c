#include <doctest.h>

#include "isosquare/errors.hpp"
#include "isosquare/property_suites.hpp"

using namespace isosquare;

TEST_CASE("every suite passes") {
  SuiteOptions options;
  options.cases = 2000;
  for (auto name : suite_names()) {
    for (const auto& report : run_suite(name, options)) {
      INFO(report.name);
      CHECK(report.passed());
      CHECK(report.checks > 0);
    }
  }
}

TEST_CASE("lemma suite reports each identity") {
  SuiteOptions options;
  options.cases = 50;
  const auto reports = run_suite("lemmas", options);
  std::vector<std::string> names;
  for (const auto& r : reports) names.push_back(r.name);
  CHECK(names == std::vector<std::string>{"mult_mersenne", "affix_one", "subtract_compose", "subtract_mersenne",
                                          "finalize_member", "normalize_defect", "inflate"});
  CHECK(run_suite("all", options).size() == reports.size() + 3);
}

TEST_CASE("different seeds draw different cases but still pass") {
  SuiteOptions options;
  options.cases = 300;
  options.seed = 99;
  for (const auto& report : run_suite("lemmas", options)) CHECK(report.passed());
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nosuch"), InvalidArgument); }
