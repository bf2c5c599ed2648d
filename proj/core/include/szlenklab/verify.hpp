#pragma once

#include <string>
#include <vector>

#include "szlenklab/config.hpp"

namespace szlenklab::verify {

enum class Suite { tsirelson, schlumprecht, baernstein, orlicz, szlenk, all };

Suite suite_from_name(const std::string& name);
std::string suite_name(Suite suite);

// One verified statement: a stable id naming what is checked, the measured
// and expected values when scalar, and pass/fail at the given tolerance.
struct CheckRecord {
  std::string id;
  bool passed = false;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  int oracle_cap = 0;
  std::vector<CheckRecord> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

SuiteReport run_suite(Suite suite, const RunConfig& cfg);

}  // namespace szlenklab::verify
