#pragma once

#include <cstdint>
#include <vector>

namespace sixfold {

/// One inclusion-exclusion level of a side's sum.
struct LevelSubtotal {
  unsigned q = 0;
  std::uint64_t terms = 0;      ///< products enumerated at this level
  std::uint64_t count_sum = 0;  ///< sum of their class counts, unsigned
  std::int64_t signed_sum = 0;  ///< (-1)^(q-1) * count_sum

  friend bool operator==(const LevelSubtotal&, const LevelSubtotal&) = default;
};

/// Composite and prime counts in both progressions up to index m.
///
/// p_plus + pi_plus == m, p_minus + pi_minus == m, and
/// pi_total == pi_plus + pi_minus counts primes <= 6m + 1 other than 2 and 3.
struct CountSummary {
  std::uint64_t m = 0;
  std::uint64_t p_plus = 0;
  std::uint64_t pi_plus = 0;
  std::uint64_t p_minus = 0;
  std::uint64_t pi_minus = 0;
  std::uint64_t pi_total = 0;
  std::vector<LevelSubtotal> levels_plus;
  std::vector<LevelSubtotal> levels_minus;
};

}  // namespace sixfold
