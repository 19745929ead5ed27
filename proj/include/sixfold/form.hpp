#pragma once

#include "sixfold/integer.hpp"

#include <optional>
#include <string_view>

namespace sixfold {

/// The two progressions that can hold primes above 3.
enum class ResidueSide {
  PlusOne,   ///< numbers 6t + 1
  MinusOne,  ///< numbers 6t - 1
};

constexpr int residue_sign(ResidueSide side) noexcept {
  return side == ResidueSide::PlusOne ? 1 : -1;
}

constexpr std::string_view to_string(ResidueSide side) noexcept {
  return side == ResidueSide::PlusOne ? "plus" : "minus";
}

/// n = 6 * m + offset with offset in [-1, 4] and m >= 1.
struct Decomposition {
  u64 m = 0;
  int offset = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Factor pair (6i + i_sign)(6j + j_sign) certifying a composite in one of the
/// progressions. Plus-side witnesses carry equal signs, minus-side opposite.
struct FactorWitness {
  u64 i = 0;
  u64 j = 0;
  int i_sign = 1;
  int j_sign = 1;

  friend bool operator==(const FactorWitness&, const FactorWitness&) = default;
};

/// Throws DomainError for n < 5.
Decomposition decompose(u64 n);

/// Side whose progression contains n, or nullopt when 2 or 3 divides n.
std::optional<ResidueSide> candidate_form(u64 n);

/// Witness that 6m + 1 is composite, nullopt when it is prime.
///
/// Searches j = 1, 2, ... while 6j^2 - 2j <= m and for each j solves
/// m = 6ij - (i + j) and m = 6ij + (i + j) for i >= j. The first hit in
/// (j, i, minus-before-plus) order is returned.
std::optional<FactorWitness> m1_witness(u64 m);

/// Witness that 6m - 1 = (6i - 1)(6j + 1) is composite, nullopt when prime.
/// Among all factorizations the one with smallest j, then smallest i, wins.
std::optional<FactorWitness> m2_witness(u64 m);

/// (6i + i_sign)(6j + j_sign). Throws ContractViolation if the witness signs
/// do not fit the side, OverflowError if the product leaves 64 bits.
u64 compose_factors(const FactorWitness& w, ResidueSide side);

}  // namespace sixfold
