#pragma once

#include <cstdint>

namespace sixfold {

using u64 = std::uint64_t;
using i128 = __int128;

/// floor(sqrt(x)), exact for every 64-bit x.
u64 isqrt(u64 x) noexcept;

/// a * b, throwing OverflowError when the product leaves 64 bits.
u64 checked_mul(u64 a, u64 b);
/// a + b, throwing OverflowError when the sum leaves 64 bits.
u64 checked_add(u64 a, u64 b);

/// Binomial coefficient C(n, k); 0 when k > n. Throws OverflowError.
u64 binomial(u64 n, u64 k);

/// Deterministic trial division up to isqrt(n).
bool is_prime_trial(u64 n) noexcept;

}  // namespace sixfold
