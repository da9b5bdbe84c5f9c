#pragma once

#include <string>
#include <vector>

#include "dlgraph/config.hpp"

namespace dlg::selftest {

struct CriterionResult {
  std::string id;      // "A1" .. "A9"
  bool pass = false;
  std::string detail;  // one-line summary or first failure
  long ms = 0;
};

// Runs the full acceptance suite with deterministic seeds. Quick mode trims
// the random corpora and skips the largest closed-form case.
std::vector<CriterionResult> run_criteria(bool quick, const Config& cfg = {});

}  // namespace dlg::selftest
