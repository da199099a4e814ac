#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projconst/oracle.hpp"

namespace projconst {

struct VerifyOptions {
  bool quick = false;  // oracle scale n <= 3, d <= 4, no Monte Carlo
  std::uint64_t seed = kDefaultSeed;
  bool inject_fault = false;  // perturbs the Jacobi-route prefactors by 0.1%
};

struct CheckResult {
  std::string id;
  double expected = 0.0;
  double got = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;  // exception text when the check could not run
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;

  /// One JSON object per line: every check, then a summary line. Contains
  /// nothing time- or machine-dependent.
  std::string render() const;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace projconst
