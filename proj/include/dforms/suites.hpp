#pragma once

#include <string>
#include <vector>

#include "dforms/rng.hpp"

namespace dforms {

// Fully determines every randomized suite: same config, same exact report.
struct RunConfig {
  std::uint64_t seed = 1;
  int dim_min = 3;
  int dim_max = 6;
  int max_p = 3;
  int max_q = 3;
  int trials = 100;
  ScalarMode mode = ScalarMode::Exact;
  double tolerance = 1e-9;
};

struct SuiteLine {
  std::string identity;  // what is being checked
  std::string anchor;    // the formula, as a display string
  long trials = 0;
  long failures = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteLine> lines;
  bool passed() const {
    for (const auto& l : lines)
      if (l.failures != 0) return false;
    return true;
  }
};

const std::vector<std::string>& suite_names();  // excludes "all"

// Runs one named identity suite. Unknown names throw std::invalid_argument.
SuiteReport run_suite(const std::string& name, const RunConfig& config);

std::string format_report(const SuiteReport& report, const RunConfig& config);

}  // namespace dforms
