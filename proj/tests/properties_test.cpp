#include <doctest.h>

#include "property_checks.hpp"

using namespace polya;

TEST_CASE("property suites") {
  for (const props::CheckResult& r : props::run_all()) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
}
