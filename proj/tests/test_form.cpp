#include "sixfold/errors.hpp"
#include "sixfold/form.hpp"
#include "sixfold/oracle.hpp"

#include <doctest.h>

using namespace sixfold;

TEST_CASE("decompose") {
  CHECK(decompose(5) == Decomposition{1, -1});
  CHECK(decompose(301) == Decomposition{50, 1});
  CHECK(decompose(36) == Decomposition{6, 0});
  CHECK(decompose(10) == Decomposition{1, 4});
  CHECK_THROWS_AS(decompose(4), DomainError);
  CHECK_THROWS_AS(decompose(0), DomainError);
  for (u64 n = 5; n < 5000; ++n) {
    const Decomposition d = decompose(n);
    CHECK(6 * d.m + d.offset == n);
    CHECK(d.m >= 1);
  }
}

TEST_CASE("candidate_form") {
  CHECK(candidate_form(35) == ResidueSide::MinusOne);
  CHECK(candidate_form(49) == ResidueSide::PlusOne);
  CHECK_FALSE(candidate_form(33).has_value());
  CHECK_THROWS_AS(candidate_form(3), DomainError);
  for (u64 n = 5; n < 5000; ++n) {
    if (!candidate_form(n)) CHECK((n % 2 == 0 || n % 3 == 0));
  }
}

TEST_CASE("m1_witness examples") {
  CHECK(m1_witness(4) == FactorWitness{1, 1, -1, -1});
  CHECK(m1_witness(8) == FactorWitness{1, 1, 1, 1});
  CHECK_FALSE(m1_witness(1).has_value());
  CHECK(m1_witness(24) == FactorWitness{5, 1, -1, -1});
  CHECK_THROWS_AS(m1_witness(0), DomainError);
}

TEST_CASE("m2_witness examples") {
  CHECK(m2_witness(6) == FactorWitness{1, 1, -1, 1});
  CHECK_FALSE(m2_witness(2).has_value());
  CHECK(m2_witness(16) == FactorWitness{1, 3, -1, 1});
}

TEST_CASE("m2_witness prefers the smallest 6j+1 factor") {
  // 6*61 - 1 = 365 = 5 * 73 only; 6*146 - 1 = 875 = 5^3 * 7 = 125 * 7 = 35 * 25.
  // (6i - 1)(6j + 1) splits of 875: (125, 7) and (5, 175). Smallest j wins: 7.
  CHECK(m2_witness(146) == FactorWitness{21, 1, -1, 1});
}

TEST_CASE("compose_factors") {
  CHECK(compose_factors({1, 1, -1, -1}, ResidueSide::PlusOne) == 25);
  CHECK(compose_factors({1, 1, -1, 1}, ResidueSide::MinusOne) == 35);
  CHECK(compose_factors({2, 1, -1, -1}, ResidueSide::PlusOne) == 55);
  CHECK_THROWS_AS(compose_factors({1, 1, -1, 1}, ResidueSide::PlusOne), ContractViolation);
  CHECK_THROWS_AS(compose_factors({1, 1, 1, 1}, ResidueSide::MinusOne), ContractViolation);
  CHECK_THROWS_AS(compose_factors({0, 1, 1, 1}, ResidueSide::PlusOne), ContractViolation);
  CHECK_THROWS_AS(compose_factors({u64{1} << 40, u64{1} << 40, 1, 1}, ResidueSide::PlusOne), OverflowError);
}

TEST_CASE("product residue over small indices") {
  for (u64 i = 1; i <= 50; ++i) {
    for (u64 j = 1; j <= 50; ++j) {
      for (int si : {-1, 1}) {
        for (int sj : {-1, 1}) {
          const ResidueSide side = si == sj ? ResidueSide::PlusOne : ResidueSide::MinusOne;
          const u64 n = compose_factors({i, j, si, sj}, side);
          CHECK(n % 6 == (si == sj ? 1u : 5u));
        }
      }
    }
  }
}

TEST_CASE("witnesses decide compositeness and round-trip") {
  const u64 m_max = 10000;
  const oracle::PrimalityTable table = oracle::sieve_upto(6 * m_max + 1);
  for (u64 m = 1; m <= m_max; ++m) {
    const auto w1 = m1_witness(m);
    REQUIRE(w1.has_value() == !table.is_prime(6 * m + 1));
    if (w1) {
      CHECK(w1->i >= w1->j);
      CHECK(decompose(compose_factors(*w1, ResidueSide::PlusOne)) == Decomposition{m, 1});
    }
    const auto w2 = m2_witness(m);
    REQUIRE(w2.has_value() == !table.is_prime(6 * m - 1));
    if (w2) CHECK(decompose(compose_factors(*w2, ResidueSide::MinusOne)) == Decomposition{m, -1});
  }
}
