#pragma once

#include <string>
#include <vector>

#include "subgrp/arith.hpp"

namespace subgrp::verify {

using arith::u64;

/// Outcome of one named consistency check.
struct CheckResult {
  std::string name;
  u64 cases = 0;
  bool pass = true;
  std::string detail;  // first counterexample, when pass is false
};

/// Cross-validates the representation, classification and counting layers
/// against the brute-force oracle over every ambient group with m*n <= max_product,
/// plus the formula-only identities. seed drives the randomized checks.
std::vector<CheckResult> run_checks(u64 max_product, u64 seed);

}  // namespace subgrp::verify
