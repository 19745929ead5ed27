#include "sixfold/integer.hpp"

#include "sixfold/errors.hpp"

#include <cmath>

namespace sixfold {

u64 isqrt(u64 x) noexcept {
  if (x < 2) return x;
  // The long double estimate is within a couple of units; fix it up exactly.
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(x)));
  constexpr u64 kMaxRoot = 0xFFFFFFFFull;
  if (r > kMaxRoot) r = kMaxRoot;
  while (r * r > x) --r;
  while (r < kMaxRoot && (r + 1) * (r + 1) <= x) ++r;
  return r;
}

u64 checked_mul(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("64-bit multiplication overflow");
  }
  return out;
}

u64 checked_add(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("64-bit addition overflow");
  }
  return out;
}

u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; each prefix is itself a binomial, so division is exact.
  unsigned __int128 acc = 1;
  for (u64 i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) throw OverflowError("binomial coefficient overflow");
  }
  return static_cast<u64>(acc);
}

bool is_prime_trial(u64 n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  const u64 root = isqrt(n);
  for (u64 f = 5; f <= root; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

}  // namespace sixfold
