#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shapes/deflation.hpp"
#include "shapes/statistics.hpp"

namespace shapes {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::optional<int> max_grade;  // default: degree of the shape polynomial
  std::size_t state_cap = kDefaultStateCap;
  unsigned threads = 1;
};

// Invariant suite for one (N, d, statistics): counting laws, level
// dimensions against enumeration, catalog generation, symmetry of every
// shape, deflation and JSON round trips, and the span of the trivial
// products. Consistency failures are reported as failed checks.
std::vector<CheckResult> run_invariant_suite(int particles, int dimension, Statistics stat,
                                             const VerifyOptions& options = {});

}  // namespace shapes
