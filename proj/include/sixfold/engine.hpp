#pragma once

#include "sixfold/basis.hpp"
#include "sixfold/form.hpp"
#include "sixfold/integer.hpp"
#include "sixfold/summary.hpp"

#include <vector>

namespace sixfold {

/// Composite count for one progression plus its per-level breakdown.
struct SideCount {
  u64 composites = 0;
  std::vector<LevelSubtotal> levels;
};

/// Number of composites n <= limit in the side's progression that d divides.
///
/// Multiples n = d u with n = target (mod 6) have u = target * d (mod 6),
/// because d^2 = 1 (mod 6). At level 1 the prime d itself is dropped when it
/// lies in the target progression. Throws ContractViolation if d shares a
/// factor with 6, d < 5, q == 0, or d exceeds the limit.
u64 class_count(u64 d, unsigned q, ResidueSide side, u64 m);

/// The same count through closed floors floor((6m + c) / (6d)):
///   plus side   q = 1: c = d + 1 (d = 5 mod 6) or 1 - d (d = 1 mod 6)
///               q > 1: c = a d + 1, a = 1 for odd s, 5 for even s
///   minus side  q = 1: c = -d - 1 (d = 5 mod 6) or d - 1 (d = 1 mod 6)
///               q > 1: c = b d - 1, b = 5 for odd s, 1 for even s
/// where s counts the 6i - 1 factors of d. Same preconditions as class_count.
u64 floor_form_count(u64 d, unsigned q, unsigned s, ResidueSide side, u64 m);

/// Signed sum over all enumerated terms; levels end where enumeration does.
SideCount composite_count(ResidueSide side, u64 m);

u64 composite_count_plus(u64 m);
u64 composite_count_minus(u64 m);
u64 prime_count_plus(u64 m);
u64 prime_count_minus(u64 m);
/// Primes up to 6m + 1, not counting 2 and 3.
u64 prime_count_total(u64 m);

CountSummary summarize(u64 m);

}  // namespace sixfold
