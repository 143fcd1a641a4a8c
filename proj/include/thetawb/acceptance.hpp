// The numbered acceptance checks, shared by the acceptance test binary and
// the `selftest` subcommand.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thetawb::acceptance {

inline constexpr int kNumCriteria = 10;

/// Fixed moduli for the numeric criteria.
inline constexpr std::uint64_t kTauSeedG2 = 7;
inline constexpr std::uint64_t kTauSeedG3 = 2024;
inline constexpr std::uint64_t kSampleSeed = 11;
inline constexpr std::uint64_t kCobleSeeds[3] = {1, 2, 3};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// One-line summary of what was measured; on failure, the first mismatches.
  std::string detail;
  double seconds = 0.0;
  /// 0 means no runtime limit.
  double limit_seconds = 0.0;
};

/// Runs criterion id in 1..kNumCriteria. Exceptions from the library are
/// caught and reported as failures.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

/// "PASS [n] title (t s): detail" or the FAIL equivalent.
std::string format_line(const CriterionResult& r);

}  // namespace thetawb::acceptance
