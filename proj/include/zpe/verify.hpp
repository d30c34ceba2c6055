#pragma once

// The invariant suite run by `zpe verify`: every module's properties checked
// against independent oracles, each reported with its measured residual.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zpe/report.hpp"

namespace zpe {

enum class Bound { at_most, at_least };

struct CheckResult {
  std::string module;
  std::string invariant;
  double residual = 0.0;
  double tolerance = 0.0;
  Bound bound = Bound::at_most;
  bool passed = false;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 1'000'000;         // per sampler
  std::size_t interference_samples = 100'000;
  std::size_t modes = 1000;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// module, invariant, residual, bound, tolerance, passed.
Table verification_table(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace zpe
