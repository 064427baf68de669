#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eqcube {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample or error on failure
  double seconds = 0;
};

/// Runs the property suites of every module on seeded random inputs.
std::vector<CheckResult> run_self_check(std::uint64_t seed = 20240601);

}  // namespace eqcube
