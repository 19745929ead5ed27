#include "sixfold/form.hpp"

#include "sixfold/errors.hpp"

#include <string>

namespace sixfold {

namespace {

void require_at_least_five(u64 n) {
  if (n < 5) {
    throw DomainError("residue decomposition needs n >= 5, got " + std::to_string(n));
  }
}

u64 factor_value(u64 index, int sign) {
  const u64 base = checked_mul(6, index);
  return sign > 0 ? checked_add(base, 1) : base - 1;
}

}  // namespace

Decomposition decompose(u64 n) {
  require_at_least_five(n);
  // Shift by one so that offsets -1..4 map to remainders 0..5.
  const u64 shifted = n + 1;
  return {shifted / 6, static_cast<int>(shifted % 6) - 1};
}

std::optional<ResidueSide> candidate_form(u64 n) {
  require_at_least_five(n);
  switch (n % 6) {
    case 1:
      return ResidueSide::PlusOne;
    case 5:
      return ResidueSide::MinusOne;
    default:
      return std::nullopt;
  }
}

std::optional<FactorWitness> m1_witness(u64 m) {
  if (m == 0) throw DomainError("m must be positive");
  // 6j^2 - 2j <= m, written to stay inside 64 bits.
  for (u64 j = 1; j <= m / (6 * j - 2); ++j) {
    // m = 6ij - i - j  <=>  m + j = i (6j - 1)
    std::optional<u64> minus_i;
    if ((m + j) % (6 * j - 1) == 0) {
      const u64 i = (m + j) / (6 * j - 1);
      if (i >= j) minus_i = i;
    }
    // m = 6ij + i + j  <=>  m - j = i (6j + 1)
    std::optional<u64> plus_i;
    if (m >= j && (m - j) % (6 * j + 1) == 0) {
      const u64 i = (m - j) / (6 * j + 1);
      if (i >= j) plus_i = i;
    }
    if (minus_i && (!plus_i || *minus_i <= *plus_i)) {
      return FactorWitness{*minus_i, j, -1, -1};
    }
    if (plus_i) return FactorWitness{*plus_i, j, 1, 1};
  }
  return std::nullopt;
}

std::optional<FactorWitness> m2_witness(u64 m) {
  if (m == 0) throw DomainError("m must be positive");
  const u64 n = factor_value(m, -1);
  // Walk the smaller factor f <= sqrt(n); the partner is n / f. Either of
  // the pair may be the 6j + 1 factor, so collect and keep the minimum.
  std::optional<FactorWitness> best;
  const auto consider = [&](u64 minus_factor, u64 plus_factor) {
    const FactorWitness w{(minus_factor + 1) / 6, (plus_factor - 1) / 6, -1, 1};
    if (!best || w.j < best->j || (w.j == best->j && w.i < best->i)) best = w;
  };
  const u64 root = isqrt(n);
  for (u64 f = 5; f <= root; f += 6) {
    if (n % f == 0) consider(f, n / f);
    if (f + 2 <= root && n % (f + 2) == 0) consider(n / (f + 2), f + 2);
  }
  return best;
}

u64 compose_factors(const FactorWitness& w, ResidueSide side) {
  const bool sign_ok = (w.i_sign == 1 || w.i_sign == -1) && (w.j_sign == 1 || w.j_sign == -1);
  if (!sign_ok || w.i == 0 || w.j == 0) {
    throw ContractViolation("witness indices must be positive with unit signs");
  }
  const bool same = w.i_sign == w.j_sign;
  if (same != (side == ResidueSide::PlusOne)) {
    throw ContractViolation("witness signs do not match the requested side");
  }
  return checked_mul(factor_value(w.i, w.i_sign), factor_value(w.j, w.j_sign));
}

}  // namespace sixfold
