#include "sixfold/engine.hpp"
#include "sixfold/errors.hpp"
#include "sixfold/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace sixfold;

TEST_CASE("class_count examples") {
  CHECK(class_count(5, 1, ResidueSide::PlusOne, 50) == 10);
  CHECK(class_count(35, 2, ResidueSide::MinusOne, 50) == 2);
  CHECK(class_count(55, 2, ResidueSide::PlusOne, 50) == 1);
  CHECK(class_count(35, 2, ResidueSide::PlusOne, 10) == 0);
  CHECK(class_count(7, 1, ResidueSide::MinusOne, 10) == 1);
  // A prime in its own progression is not counted as its own multiple.
  CHECK(class_count(7, 1, ResidueSide::PlusOne, 1) == 0);
  CHECK(class_count(5, 1, ResidueSide::MinusOne, 1) == 0);
}

TEST_CASE("class_count preconditions") {
  CHECK_THROWS_AS(class_count(9, 1, ResidueSide::PlusOne, 50), ContractViolation);
  CHECK_THROWS_AS(class_count(10, 1, ResidueSide::PlusOne, 50), ContractViolation);
  CHECK_THROWS_AS(class_count(1, 1, ResidueSide::PlusOne, 50), ContractViolation);
  CHECK_THROWS_AS(class_count(5, 0, ResidueSide::PlusOne, 50), ContractViolation);
  CHECK_THROWS_AS(class_count(305, 1, ResidueSide::PlusOne, 50), ContractViolation);
  CHECK_THROWS_AS(class_count(301, 1, ResidueSide::MinusOne, 50), ContractViolation);
  CHECK_NOTHROW(class_count(301, 2, ResidueSide::PlusOne, 50));
  CHECK_THROWS_AS(class_count(5, 1, ResidueSide::PlusOne, 0), DomainError);
}

TEST_CASE("class_count matches the literal multiple walk") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20000; ++trial) {
    const u64 m = 1 + rng() % 3000;
    const ResidueSide side = rng() % 2 ? ResidueSide::PlusOne : ResidueSide::MinusOne;
    const u64 limit = side == ResidueSide::PlusOne ? 6 * m + 1 : 6 * m - 1;
    u64 d = 5 + rng() % (limit - 4);
    while (d % 2 == 0 || d % 3 == 0) ++d;
    if (d > limit) continue;
    const unsigned q = 1 + static_cast<unsigned>(rng() % 3);
    CHECK(class_count(d, q, side, m) == oracle::oracle_class_count(d, q, side, m));
  }
}

TEST_CASE("products past the limit have no multiples in range") {
  // Brute-force the normative definition at d just beyond the limit.
  for (u64 m : {1u, 10u, 50u, 777u}) {
    for (ResidueSide side : {ResidueSide::PlusOne, ResidueSide::MinusOne}) {
      const u64 limit = side == ResidueSide::PlusOne ? 6 * m + 1 : 6 * m - 1;
      for (u64 d = limit + 1; d < limit + 60; ++d) {
        if (d % 2 == 0 || d % 3 == 0) continue;
        u64 count = 0;
        for (u64 n = d; n <= limit; n += d) ++count;
        CHECK(count == 0);
      }
    }
  }
}

TEST_CASE("floor forms agree with class_count") {
  for (u64 m = 1; m <= 300; ++m) {
    for (ResidueSide side : {ResidueSide::PlusOne, ResidueSide::MinusOne}) {
      for (const SieveTerm& t : enumerate_terms(build_basis(m, side))) {
        CHECK(floor_form_count(t.d, t.q, t.s, side, m) == class_count(t.d, t.q, side, m));
      }
    }
  }
}

TEST_CASE("composite counts") {
  CHECK(composite_count_plus(50) == 22);
  CHECK(composite_count_plus(1) == 0);
  CHECK(composite_count_plus(10) == 3);
  CHECK(composite_count_minus(50) == 18);
  CHECK(composite_count_minus(10) == 1);
  CHECK(composite_count_minus(1) == 0);
  CHECK_THROWS_AS(composite_count_plus(0), DomainError);
  CHECK_THROWS_AS(composite_count_minus(UINT64_MAX / 6 + 1), OverflowError);
}

TEST_CASE("level subtotals at m = 50") {
  const SideCount plus = composite_count(ResidueSide::PlusOne, 50);
  REQUIRE(plus.levels.size() == 2);
  CHECK(plus.levels[0] == LevelSubtotal{1, 5, 27, 27});
  CHECK(plus.levels[1] == LevelSubtotal{2, 10, 5, -5});

  const SideCount minus = composite_count(ResidueSide::MinusOne, 50);
  REQUIRE(minus.levels.size() == 2);
  CHECK(minus.levels[0] == LevelSubtotal{1, 4, 24, 24});
  CHECK(minus.levels[1] == LevelSubtotal{2, 6, 6, -6});
}

TEST_CASE("per-level subtotals match the oracle's literal walk") {
  for (u64 m : {50u, 333u, 2500u}) {
    for (ResidueSide side : {ResidueSide::PlusOne, ResidueSide::MinusOne}) {
      std::vector<u64> brute;
      for (const SieveTerm& t : enumerate_terms(build_basis(m, side))) {
        if (brute.size() < t.q) brute.resize(t.q);
        brute[t.q - 1] += oracle::oracle_class_count(t.d, t.q, side, m);
      }
      const SideCount got = composite_count(side, m);
      REQUIRE(got.levels.size() == brute.size());
      for (std::size_t q = 0; q < brute.size(); ++q) CHECK(got.levels[q].count_sum == brute[q]);
    }
  }
}

TEST_CASE("prime counts") {
  CHECK(prime_count_plus(50) == 28);
  CHECK(prime_count_plus(10) == 7);
  CHECK(prime_count_plus(1) == 1);
  CHECK(prime_count_minus(50) == 32);
  CHECK(prime_count_minus(10) == 9);
  CHECK(prime_count_minus(2) == 2);
  CHECK(prime_count_total(50) == 60);
  CHECK(prime_count_total(10) == 16);
  CHECK(prime_count_total(1) == 2);
}

TEST_CASE("summaries agree with the oracle and with themselves") {
  const u64 m_max = 1500;
  const oracle::PrimalityTable table = oracle::sieve_upto(6 * m_max + 1);
  u64 previous_total = 0;
  for (u64 m = 1; m <= m_max; ++m) {
    const CountSummary s = summarize(m);
    const CountSummary o = oracle::oracle_counts(table, m);
    CHECK(s.p_plus == o.p_plus);
    CHECK(s.pi_plus == o.pi_plus);
    CHECK(s.p_minus == o.p_minus);
    CHECK(s.pi_minus == o.pi_minus);
    CHECK(s.pi_total == o.pi_total);
    CHECK(s.p_plus + s.pi_plus == m);
    CHECK(s.p_minus + s.pi_minus == m);
    CHECK(s.pi_total == 2 * m - (s.p_plus + s.p_minus));
    if (m > 1) {
      CHECK(s.pi_total >= previous_total);
      CHECK(s.pi_total - previous_total <= 2);
    }
    previous_total = s.pi_total;
  }
}

TEST_CASE("truncated sums bracket the composite count") {
  for (u64 m = 1; m <= 1000; ++m) {
    for (ResidueSide side : {ResidueSide::PlusOne, ResidueSide::MinusOne}) {
      const SideCount c = composite_count(side, m);
      std::int64_t partial = 0;
      for (const LevelSubtotal& level : c.levels) {
        partial += level.signed_sum;
        const auto exact = static_cast<std::int64_t>(c.composites);
        if (level.q % 2 == 1) {
          CHECK(partial >= exact);
        } else {
          CHECK(partial <= exact);
        }
      }
      CHECK(partial == static_cast<std::int64_t>(c.composites));
    }
  }
}
