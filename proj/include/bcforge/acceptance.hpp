#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bcforge {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  /// Counts on success, the first mismatches on failure.
  std::string detail;
  double seconds = 0;
};

/// Runs the ten acceptance criteria against the shipped golden tables and
/// seeded synthetic instances; `seed` offsets every synthetic seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0, unsigned threads = 0);

/// "PASS 3 Golden Dolbeault tables (...)" lines.
std::string format_acceptance(const std::vector<CriterionResult>& results);

}  // namespace bcforge
