#include "sixfold/oracle.hpp"

#include "sixfold/errors.hpp"

#include <stdexcept>
#include <string>

namespace sixfold::oracle {

bool PrimalityTable::is_prime(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("n = " + std::to_string(n) + " is past the sieve limit");
  return flags_[n];
}

std::uint64_t PrimalityTable::prime_count(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("n = " + std::to_string(n) + " is past the sieve limit");
  std::uint64_t count = 0;
  for (std::uint64_t i = 2; i <= n; ++i) count += flags_[i] ? 1 : 0;
  return count;
}

std::vector<std::uint64_t> PrimalityTable::primes() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit_; ++i) {
    if (flags_[i]) out.push_back(i);
  }
  return out;
}

PrimalityTable sieve_upto(std::uint64_t limit, std::uint64_t cap) {
  if (limit == 0) throw DomainError("sieve limit must be at least 1");
  if (limit > cap) {
    throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds the oracle cap " +
                        std::to_string(cap));
  }
  PrimalityTable table;
  table.limit_ = limit;
  table.flags_.assign(limit + 1, true);
  table.flags_[0] = false;
  table.flags_[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!table.flags_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) table.flags_[j] = false;
  }
  return table;
}

CountSummary oracle_counts(const PrimalityTable& table, std::uint64_t m) {
  if (m == 0) throw DomainError("m must be positive");
  if (table.limit() < 6 * m + 1) throw std::out_of_range("primality table does not reach 6m + 1");
  CountSummary out;
  out.m = m;
  for (std::uint64_t t = 1; t <= m; ++t) {
    if (table.is_prime(6 * t + 1)) {
      ++out.pi_plus;
    } else {
      ++out.p_plus;
    }
    if (table.is_prime(6 * t - 1)) {
      ++out.pi_minus;
    } else {
      ++out.p_minus;
    }
  }
  out.pi_total = table.prime_count(6 * m + 1) - 2;
  return out;
}

CountSummary oracle_counts(std::uint64_t m, std::uint64_t cap) {
  if (m == 0) throw DomainError("m must be positive");
  if (m > (cap - 1) / 6) {
    throw ResourceError("6m + 1 exceeds the oracle cap " + std::to_string(cap));
  }
  return oracle_counts(sieve_upto(6 * m + 1, cap), m);
}

std::uint64_t oracle_class_count(std::uint64_t d, unsigned q, ResidueSide side, std::uint64_t m) {
  if (m == 0) throw DomainError("m must be positive");
  const std::uint64_t limit = side == ResidueSide::PlusOne ? 6 * m + 1 : 6 * m - 1;
  const std::uint64_t target = side == ResidueSide::PlusOne ? 1 : 5;
  if (q == 0 || d < 5 || d % 2 == 0 || d % 3 == 0 || d > limit) {
    throw ContractViolation("oracle_class_count precondition failed");
  }
  std::uint64_t count = 0;
  for (std::uint64_t n = d; n <= limit; n += d) {
    if (n % 6 != target) continue;
    if (q == 1 && n == d) continue;
    ++count;
  }
  return count;
}

std::uint64_t smallest_factor(std::uint64_t n) {
  if (n < 2) return 0;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return f;
  }
  return n;
}

}  // namespace sixfold::oracle
