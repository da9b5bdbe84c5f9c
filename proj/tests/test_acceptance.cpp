// Acceptance gate: one line per criterion A1..A9, all must pass.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "dlgraph/selftest.hpp"

TEST_CASE("acceptance criteria") {
  auto results = dlg::selftest::run_criteria(/*quick=*/false);
  REQUIRE(results.size() == 9);
  for (const auto& r : results) {
    std::printf("%s %s (%ld ms): %s\n", r.id.c_str(),
                r.pass ? "pass" : "FAIL", r.ms, r.detail.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(r.pass, r.id, ": ", r.detail);
  }
}
