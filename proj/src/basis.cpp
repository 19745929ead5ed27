#include "sixfold/basis.hpp"

#include "sixfold/errors.hpp"

#include <algorithm>

namespace sixfold {

namespace {

constexpr u64 kMaxM = (UINT64_MAX - 1) / 6;

void require_m(u64 m) {
  if (m == 0) throw DomainError("m must be positive");
  if (m > kMaxM) throw OverflowError("6m + 1 does not fit in 64 bits");
}

struct TermWalker {
  const std::vector<u64>& primes;
  u64 limit;
  const std::function<void(const TermView&)>& visit;
  std::vector<u64> stack;

  void descend(std::size_t from, u64 product, unsigned minus_count) {
    for (std::size_t idx = from; idx < primes.size(); ++idx) {
      const u64 p = primes[idx];
      // Ascending primes: once one overshoots, every later one does too.
      if (p > limit / product) break;
      const u64 d = product * p;
      const unsigned s = minus_count + (p % 6 == 5 ? 1u : 0u);
      stack.push_back(p);
      visit(TermView{d, stack, s});
      descend(idx + 1, d, s);
      stack.pop_back();
    }
  }
};

}  // namespace

std::vector<u64> CoefficientBasis::merged() const {
  std::vector<u64> out;
  out.reserve(minus_primes.size() + plus_primes.size());
  std::merge(minus_primes.begin(), minus_primes.end(), plus_primes.begin(), plus_primes.end(),
             std::back_inserter(out));
  return out;
}

SieveTerm TermView::materialize() const {
  return SieveTerm{d, {factors.begin(), factors.end()}, q(), s, d_residue()};
}

IndexBounds index_bounds(u64 m) {
  require_m(m);
  const u64 root_plus = isqrt(6 * m + 1);
  const u64 root_six = isqrt(6 * m);
  return {(1 + root_plus) / 6, (root_plus - 1) / 6, root_six / 6};
}

CoefficientBasis build_basis(u64 m, ResidueSide side) {
  CoefficientBasis basis;
  basis.m = m;
  basis.side = side;
  basis.bounds = index_bounds(m);
  basis.limit = side == ResidueSide::PlusOne ? 6 * m + 1 : 6 * m - 1;

  const bool plus = side == ResidueSide::PlusOne;
  const u64 minus_bound = plus ? basis.bounds.nu : basis.bounds.r;
  const u64 plus_bound = plus ? basis.bounds.k : basis.bounds.r;
  for (u64 i = 1; i <= minus_bound; ++i) {
    if (is_prime_trial(6 * i - 1)) basis.minus_primes.push_back(6 * i - 1);
  }
  for (u64 j = 1; j <= plus_bound; ++j) {
    if (is_prime_trial(6 * j + 1)) basis.plus_primes.push_back(6 * j + 1);
  }
  return basis;
}

void for_each_term(const CoefficientBasis& basis, const std::function<void(const TermView&)>& visit) {
  const std::vector<u64> primes = basis.merged();
  TermWalker walker{primes, basis.limit, visit, {}};
  walker.stack.reserve(64);
  walker.descend(0, 1, 0);
}

std::vector<SieveTerm> enumerate_terms(const CoefficientBasis& basis) {
  std::vector<SieveTerm> out;
  for_each_term(basis, [&](const TermView& t) { out.push_back(t.materialize()); });
  return out;
}

u64 count_terms(const CoefficientBasis& basis) {
  u64 n = 0;
  for_each_term(basis, [&](const TermView&) { ++n; });
  return n;
}

GammaPair gamma(unsigned q, u64 nu0, u64 k0) {
  if (q == 0) throw DomainError("level q must be positive");
  GammaPair out;
  for (u64 s = 0; s <= q; ++s) {
    const u64 ways = checked_mul(binomial(nu0, s), binomial(k0, q - s));
    if (s % 2 == 1) {
      out.minus = checked_add(out.minus, ways);
    } else {
      out.plus = checked_add(out.plus, ways);
    }
  }
  return out;
}

std::vector<LevelTally> level_tallies(const CoefficientBasis& basis) {
  const auto levels = static_cast<unsigned>(basis.nu0() + basis.k0());
  std::vector<LevelTally> out(levels);
  for (unsigned q = 1; q <= levels; ++q) {
    const GammaPair g = gamma(q, basis.nu0(), basis.k0());
    out[q - 1] = LevelTally{q, 0, 0, g.minus, g.plus};
  }
  for_each_term(basis, [&](const TermView& t) {
    LevelTally& tally = out[t.q() - 1];
    if (t.d_residue() < 0) {
      ++tally.gamma_minus;
    } else {
      ++tally.gamma_plus;
    }
  });
  return out;
}

std::vector<GammaPair> unpruned_level_counts(const CoefficientBasis& basis) {
  const std::vector<u64> primes = basis.merged();
  if (primes.size() > 24) {
    throw ContractViolation("unpruned enumeration is limited to 24 basis primes");
  }
  std::vector<GammaPair> out(primes.size());
  const u64 subsets = u64{1} << primes.size();
  for (u64 mask = 1; mask < subsets; ++mask) {
    u64 residue = 1;
    unsigned q = 0;
    for (std::size_t b = 0; b < primes.size(); ++b) {
      if (mask >> b & 1u) {
        residue = residue * (primes[b] % 6) % 6;
        ++q;
      }
    }
    if (residue == 5) {
      ++out[q - 1].minus;
    } else {
      ++out[q - 1].plus;
    }
  }
  return out;
}

}  // namespace sixfold
