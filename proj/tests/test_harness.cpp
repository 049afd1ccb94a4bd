#include <doctest.h>

#include <algorithm>

#include "domaincheck/error.hpp"
#include "domaincheck/harness.hpp"

using namespace domaincheck;

namespace {

SuiteParams small(std::uint64_t seed = 0, Exec exec = Exec::Parallel) { return {3, seed, 40, exec}; }

}  // namespace

TEST_CASE("reports round-trip through JSON and text") {
  SuiteReport r;
  r.suite = "prop5";
  r.cases = 10;
  r.passed = 9;
  r.seed = 42;
  r.notes = {"sampled"};
  r.failures.push_back({"prop5", "diamond#3", "gis_to_topo", {{"point", "l"}, {"net", {1, 2}}}});
  const SuiteReport back = report_from_json(report_to_json(r));
  CHECK(back.suite == r.suite);
  CHECK(back.cases == r.cases);
  CHECK(back.passed == r.passed);
  CHECK(back.failures == r.failures);
  CHECK(back.notes == r.notes);
  const SuiteReport text = report_from_text(report_to_text(r));
  CHECK(text.failures == r.failures);
  CHECK(text.cases == 10);
  CHECK(text.passed == 9);
  CHECK_FALSE(text.ok());
}

TEST_CASE("unknown suites are rejected") {
  try {
    (void)run_suite("prop3", small());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownSuite);
  }
  CHECK(suite_names().back() == "all");
  CHECK(std::ranges::find(suite_names(), "thm1") != suite_names().end());
}

TEST_CASE("small suites pass") {
  for (const char* name : {"exampleone", "order", "collapse", "prop1", "thm1", "rudin"}) {
    const SuiteReport r = run_suite(name, small());
    INFO(name);
    CHECK(r.cases > 0);
    CHECK(r.ok());
  }
}

TEST_CASE("suite output does not depend on threading") {
  for (const char* name : {"prop4", "prop5", "thm2-if"}) {
    CHECK(report_to_json(run_suite(name, small(9, Exec::Serial))) ==
          report_to_json(run_suite(name, small(9, Exec::Parallel))));
  }
  CHECK(report_to_json(run_suite("prop6", small(5))) == report_to_json(run_suite("prop6", small(5))));
}
