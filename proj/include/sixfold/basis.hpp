#pragma once

#include "sixfold/form.hpp"
#include "sixfold/integer.hpp"

#include <functional>
#include <span>
#include <vector>

namespace sixfold {

/// Index bounds for the sieving primes at a given m.
///   nu = floor((1 + isqrt(6m+1)) / 6)   largest i with 6i - 1 <= sqrt(6m+1)
///   k  = floor((isqrt(6m+1) - 1) / 6)   largest j with 6j + 1 <= sqrt(6m+1)
///   r  = floor(isqrt(6m) / 6)           shared bound for the 6m - 1 side
struct IndexBounds {
  u64 nu = 0;
  u64 k = 0;
  u64 r = 0;

  friend bool operator==(const IndexBounds&, const IndexBounds&) = default;
};

/// Sieving primes for one progression at one m.
struct CoefficientBasis {
  u64 m = 0;
  ResidueSide side = ResidueSide::PlusOne;
  u64 limit = 0;  ///< 6m + 1 or 6m - 1
  IndexBounds bounds;
  std::vector<u64> minus_primes;  ///< primes 6i - 1, ascending
  std::vector<u64> plus_primes;   ///< primes 6j + 1, ascending

  u64 nu0() const noexcept { return minus_primes.size(); }
  u64 k0() const noexcept { return plus_primes.size(); }
  bool empty() const noexcept { return minus_primes.empty() && plus_primes.empty(); }
  /// Both sequences merged in ascending order.
  std::vector<u64> merged() const;
};

/// One squarefree product of basis primes.
struct SieveTerm {
  u64 d = 1;
  std::vector<u64> factors;  ///< strictly increasing
  unsigned q = 0;            ///< number of factors
  unsigned s = 0;            ///< factors congruent to 5 mod 6
  int d_residue = 1;         ///< +1 or -1, i.e. d mod 6 read as 1 or 5

  /// (-1)^(q-1): the inclusion-exclusion sign of this term.
  int sign() const noexcept { return q % 2 == 1 ? 1 : -1; }
};

/// Lightweight view handed to enumeration visitors; valid only during the call.
struct TermView {
  u64 d;
  std::span<const u64> factors;
  unsigned s;

  unsigned q() const noexcept { return static_cast<unsigned>(factors.size()); }
  int d_residue() const noexcept { return s % 2 == 0 ? 1 : -1; }
  SieveTerm materialize() const;
};

struct LevelTally {
  unsigned q = 0;
  u64 gamma_minus = 0;          ///< enumerated terms with d = -1 mod 6
  u64 gamma_plus = 0;           ///< enumerated terms with d = +1 mod 6
  u64 gamma_minus_formula = 0;  ///< binomial count over all subsets
  u64 gamma_plus_formula = 0;
};

struct GammaPair {
  u64 minus = 0;
  u64 plus = 0;

  friend bool operator==(const GammaPair&, const GammaPair&) = default;
};

/// Throws DomainError for m == 0, OverflowError when 6m + 1 leaves 64 bits.
IndexBounds index_bounds(u64 m);

/// Primes of the form 6i - 1 / 6j + 1 up to the side's index bounds. Composite
/// candidates such as 25 or 35 are skipped.
CoefficientBasis build_basis(u64 m, ResidueSide side);

/// Every squarefree product d <= basis.limit of one or more basis primes, in
/// lexicographic order of the ascending factor sequence.
std::vector<SieveTerm> enumerate_terms(const CoefficientBasis& basis);

/// Visitor form of enumerate_terms; no per-term allocation.
void for_each_term(const CoefficientBasis& basis, const std::function<void(const TermView&)>& visit);

/// Number of terms enumerate_terms would produce.
u64 count_terms(const CoefficientBasis& basis);

/// Cardinalities of the level-q products split by residue:
///   minus = sum over odd s,  s + t = q, of C(nu0, s) C(k0, t)
///   plus  = sum over even s, s + t = q, of C(nu0, s) C(k0, t)
GammaPair gamma(unsigned q, u64 nu0, u64 k0);

/// Per-level tallies of the pruned enumeration next to the gamma formula.
/// Levels run from 1 to nu0 + k0.
std::vector<LevelTally> level_tallies(const CoefficientBasis& basis);

/// Residue split of all 2^(nu0+k0) - 1 products with no limit pruning, one
/// entry per level 1..nu0+k0. Product residues are read off the actual
/// products. Throws ContractViolation when the basis holds more than 24
/// primes.
std::vector<GammaPair> unpruned_level_counts(const CoefficientBasis& basis);

}  // namespace sixfold
