#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dualhelm_cli/config.hpp"

namespace dualhelm::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kNotConverged = 2, kInconsistent = 3 };

int run_solve(const RunConfig& cfg, std::ostream& log);
int run_scalar(const RunConfig& cfg, std::ostream& log);
int run_phase(const RunConfig& cfg, std::ostream& log);
int run_verify(const RunConfig& cfg, std::ostream& log);
int run_kernel_check(const RunConfig& cfg, std::ostream& log);

/// Validates and dispatches; maps exceptions to exit codes.
int run(const RunConfig& cfg, std::ostream& log);

struct PropertyResult {
  std::string section;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// The property suites of legendre, kernel, functionals and phase. fault = "scale_h"
/// multiplies every h value seen by the checks by 1.01.
std::vector<PropertyResult> verify_suite(const std::string& fault, std::uint64_t seed);

}  // namespace dualhelm::cli
