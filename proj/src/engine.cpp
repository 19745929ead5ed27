#include "sixfold/engine.hpp"

#include "sixfold/errors.hpp"

#include <string>

namespace sixfold {

namespace {

u64 side_limit(ResidueSide side, u64 m) {
  index_bounds(m);  // validates m and the 6m + 1 range
  return side == ResidueSide::PlusOne ? 6 * m + 1 : 6 * m - 1;
}

void require_term(u64 d, unsigned q, u64 limit) {
  if (q == 0) throw ContractViolation("level q must be positive");
  if (d < 5 || d % 2 == 0 || d % 3 == 0) {
    throw ContractViolation("d must be coprime to 6 and at least 5, got " + std::to_string(d));
  }
  if (d > limit) {
    throw ContractViolation("d = " + std::to_string(d) + " exceeds the limit " + std::to_string(limit));
  }
}

u64 count_with_limit(u64 d, unsigned q, ResidueSide side, u64 limit) {
  const u64 target = side == ResidueSide::PlusOne ? 1 : 5;
  const u64 d_res = d % 6;
  const u64 u_start = target * d_res % 6;  // 1 or 5
  const u64 u_max = limit / d;
  u64 count = u_max >= u_start ? (u_max - u_start) / 6 + 1 : 0;
  if (q == 1 && d_res == target) --count;  // u = 1 gives the prime d itself
  return count;
}

}  // namespace

u64 class_count(u64 d, unsigned q, ResidueSide side, u64 m) {
  const u64 limit = side_limit(side, m);
  require_term(d, q, limit);
  return count_with_limit(d, q, side, limit);
}

u64 floor_form_count(u64 d, unsigned q, unsigned s, ResidueSide side, u64 m) {
  const u64 limit = side_limit(side, m);
  require_term(d, q, limit);
  const i128 six_m = i128{6} * m;
  const i128 dd = d;
  const bool odd = s % 2 == 1;
  i128 numerator = 0;
  if (side == ResidueSide::PlusOne) {
    if (q == 1) {
      numerator = odd ? six_m + dd + 1 : six_m - dd + 1;
    } else {
      numerator = six_m + (odd ? 1 : 5) * dd + 1;
    }
  } else {
    if (q == 1) {
      numerator = odd ? six_m - dd - 1 : six_m + dd - 1;
    } else {
      numerator = six_m + (odd ? 5 : 1) * dd - 1;
    }
  }
  // d <= limit keeps every numerator nonnegative.
  return static_cast<u64>(numerator / (6 * dd));
}

SideCount composite_count(ResidueSide side, u64 m) {
  const CoefficientBasis basis = build_basis(m, side);
  SideCount out;
  i128 total = 0;
  for_each_term(basis, [&](const TermView& t) {
    const unsigned q = t.q();
    if (out.levels.size() < q) out.levels.resize(q);
    LevelSubtotal& level = out.levels[q - 1];
    level.q = q;
    const u64 c = count_with_limit(t.d, q, side, basis.limit);
    ++level.terms;
    level.count_sum += c;
    total += q % 2 == 1 ? i128{c} : -i128{c};
  });
  for (LevelSubtotal& level : out.levels) {
    level.signed_sum = level.q % 2 == 1 ? static_cast<std::int64_t>(level.count_sum)
                                        : -static_cast<std::int64_t>(level.count_sum);
  }
  if (total < 0 || total > static_cast<i128>(m)) {
    throw ContractViolation("inclusion-exclusion total left [0, m]");
  }
  out.composites = static_cast<u64>(total);
  return out;
}

u64 composite_count_plus(u64 m) { return composite_count(ResidueSide::PlusOne, m).composites; }
u64 composite_count_minus(u64 m) { return composite_count(ResidueSide::MinusOne, m).composites; }
u64 prime_count_plus(u64 m) { return m - composite_count_plus(m); }
u64 prime_count_minus(u64 m) { return m - composite_count_minus(m); }

u64 prime_count_total(u64 m) {
  return 2 * m - (composite_count_plus(m) + composite_count_minus(m));
}

CountSummary summarize(u64 m) {
  SideCount plus = composite_count(ResidueSide::PlusOne, m);
  SideCount minus = composite_count(ResidueSide::MinusOne, m);
  CountSummary out;
  out.m = m;
  out.p_plus = plus.composites;
  out.pi_plus = m - plus.composites;
  out.p_minus = minus.composites;
  out.pi_minus = m - minus.composites;
  out.pi_total = out.pi_plus + out.pi_minus;
  out.levels_plus = std::move(plus.levels);
  out.levels_minus = std::move(minus.levels);
  return out;
}

}  // namespace sixfold
