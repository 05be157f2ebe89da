#pragma once

#include <string>
#include <vector>

namespace paw {

/// How `observed` is compared to `expected`.
enum class Comparison {
  Equal,    // |expected − observed| ≤ tolerance
  AtMost,   // observed ≤ expected + tolerance
  AtLeast,  // observed ≥ expected − tolerance
};

struct VerificationResult {
  int criterion = 0;
  std::string name;
  double expected = 0;
  double observed = 0;
  double tolerance = 0;
  Comparison comparison = Comparison::Equal;
  bool passed = false;
  std::string anchor;  // what the check reproduces
};

bool evaluate(Comparison comparison, double expected, double observed, double tolerance);

/// Runs the reproduction checks (criteria 1–10) and returns one row per check.
std::vector<VerificationResult> run_verification();

}  // namespace paw
