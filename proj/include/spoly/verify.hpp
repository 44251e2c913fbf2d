#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spoly {

// One theorem-backed property suite execution.
struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  long instances = 0;
  long budget = 0;
  std::vector<CaseResult> cases;
  int passed = 0;
  int failed = 0;
  bool pass = false;
};

struct SuiteOptions {
  long instances = 0;  // 0: suite default
  long budget = 0;     // falsifier trials per check; 0: suite default
  std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();

// Runs one suite; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

// Deterministic serialization (no timings, fixed float formatting), so
// reports are byte-identical across runs and thread counts.
std::string suite_report_json(const SuiteReport& rep);

}  // namespace spoly
