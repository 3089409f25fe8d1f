#pragma once

// The acceptance criteria as runnable checks. Shared by the acceptance
// binary and `commacat selftest`.

#include <cstdint>
#include <string>
#include <vector>

namespace commacat::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::size_t checks = 0;
  /// Deterministic summary (counts, wall sets); no timings.
  std::string detail;
  /// First few violations, if any.
  std::vector<std::string> violations;
  double seconds = 0;
};

/// Criteria 1-8 (or the listed subset). Criterion 9 compares two CLI runs and
/// lives with the callers.
std::vector<CriterionResult> run(std::uint64_t seed, const std::vector<int>& only = {});

/// Everything except seconds, for determinism comparisons.
std::string fingerprint(const std::vector<CriterionResult>& results);

}  // namespace commacat::acceptance
