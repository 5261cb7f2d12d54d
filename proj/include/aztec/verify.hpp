#pragma once

// The acceptance criteria as runnable checks, grouped in suites. Shared by
// the acceptance test binary and `aztec verify`.

#include <functional>
#include <string>
#include <vector>

#include "aztec/parallel.hpp"

namespace aztec::verify {

enum class Suite { exact, asym, sampler, heights, all };

Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct Config {
  std::string calibration_file;  // empty: the file shipped with the sources
  Backend backend = Backend::openmp;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Criterion ids (1..15) run by a suite, in order.
std::vector<int> suite_criteria(Suite s);
std::string criterion_name(int id);
CriterionResult run_criterion(int id, const Config& cfg = {});
std::vector<CriterionResult> run_suite(Suite s, const Config& cfg = {},
                                       const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  3 boundary-row formula: ... (0.01 s)"; timing off keeps the line
// reproducible byte for byte.
std::string format_result(const CriterionResult& r, bool timing = true);

}  // namespace aztec::verify
