#pragma once

// Brute-force ground truth. Nothing here may depend on the engine or on the
// basis code; the only shared piece is the residue decomposition.

#include "sixfold/form.hpp"
#include "sixfold/summary.hpp"

#include <cstdint>
#include <vector>

namespace sixfold::oracle {

inline constexpr std::uint64_t kDefaultCap = 100'000'000;

/// Eratosthenes table over [0, limit].
class PrimalityTable {
 public:
  PrimalityTable() = default;

  std::uint64_t limit() const noexcept { return limit_; }
  /// Throws std::out_of_range past the limit.
  bool is_prime(std::uint64_t n) const;
  /// Number of primes <= n (n <= limit).
  std::uint64_t prime_count(std::uint64_t n) const;
  /// All primes in the table, ascending.
  std::vector<std::uint64_t> primes() const;

 private:
  friend PrimalityTable sieve_upto(std::uint64_t limit, std::uint64_t cap);

  std::uint64_t limit_ = 0;
  std::vector<bool> flags_;
};

/// Throws DomainError for limit == 0, ResourceError above cap.
PrimalityTable sieve_upto(std::uint64_t limit, std::uint64_t cap = kDefaultCap);

/// Counts by scanning t = 1..m and looking up 6t + 1 and 6t - 1.
/// The table must reach 6m + 1. Level breakdowns stay empty.
CountSummary oracle_counts(const PrimalityTable& table, std::uint64_t m);
/// Builds its own table of exactly 6m + 1 entries.
CountSummary oracle_counts(std::uint64_t m, std::uint64_t cap = kDefaultCap);

/// Walks d, 2d, 3d, ... up to the side's limit, keeps the multiples in the
/// side's progression and drops d itself at level 1.
std::uint64_t oracle_class_count(std::uint64_t d, unsigned q, ResidueSide side, std::uint64_t m);

/// Smallest prime factor by trial division; 0 for n < 2.
std::uint64_t smallest_factor(std::uint64_t n);

}  // namespace sixfold::oracle
