// Copyright 2026 The psigraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "psigraph/psi.hpp"

namespace psigraph {
namespace {

using Big = Natural::Big;

// Sum of n / gcd(n, k) over the residues k of Z_n.
std::uint64_t residue_order_sum(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t k = 0; k < n; ++k) s += n / std::gcd(n, k);
  return s;
}

// (p^(2a+1) + 1) / (p + 1) in cpp_int.
Big closed_form(const Big& p, unsigned a) {
  Big x = 1;
  for (unsigned i = 0; i < 2 * a + 1; ++i) x *= p;
  return (x + 1) / (p + 1);
}

TEST(Psi, SmallValues) {
  EXPECT_EQ(psi_prime_power(Natural{2u}, 1), Natural{3u});
  EXPECT_EQ(psi_prime_power(Natural{2u}, 2), Natural{11u});
  EXPECT_EQ(psi_prime_power(Natural{2u}, 3), Natural{43u});
  EXPECT_EQ(psi_prime_power(Natural{5u}, 1), Natural{21u});
  EXPECT_EQ(psi_cyclic(factorize(std::uint64_t{20})), Natural{231u});
  EXPECT_EQ(psi_cyclic(factorize(std::uint64_t{1})), Natural{1u});
}

TEST(Psi, CyclicMatchesResidueSum) {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    ASSERT_EQ(psi_cyclic(factorize(n)), Natural{residue_order_sum(n)}) << n;
  }
}

TEST(Psi, OracleMatchesFastPath) {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    ASSERT_EQ(psi_cyclic_oracle(Natural{n}), psi_cyclic(factorize(n))) << n;
  }
}

TEST(Psi, PrimePowersMatchClosedFormOnBothPaths) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 104729u}) {
    for (unsigned a = 1; a <= 60; ++a) {
      const Natural fast = psi_prime_power(Natural{p}, a);
      ASSERT_EQ(fast.to_big(), closed_form(p, a)) << p << "^" << a;
      UnboundedScope scope;
      ASSERT_EQ(psi_prime_power(Natural{p}, a), fast);
    }
  }
}

TEST(Psi, RejectsNonPrimeBase) {
  EXPECT_THROW(psi_prime_power(Natural{4u}, 1), std::invalid_argument);
  EXPECT_THROW(psi_prime_power(Natural{1u}, 1), std::invalid_argument);
}

TEST(Psi, PrimePowerDivisibilityRule) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned a = 1; a <= 12; ++a) {
      for (unsigned b = 1; b <= 12; ++b) {
        const bool actual = divides(psi_prime_power(Natural{p}, a), psi_prime_power(Natural{p}, b));
        ASSERT_EQ(prime_power_psi_divides(a, b), actual) << p << " " << a << " " << b;
      }
    }
  }
  EXPECT_FALSE(prime_power_psi_divides(1, 2));  // 3 does not divide 11
  EXPECT_TRUE(prime_power_psi_divides(1, 4));
  EXPECT_THROW(prime_power_psi_divides(0, 1), std::invalid_argument);
}

TEST(Psi, InlineThresholdIsExact) {
  const Big limit = (Big(1) << 128);
  // psi(p) < 2^128 for every 64-bit p, so a = 1 has no finite threshold.
  EXPECT_EQ(max_inline_psi_base(1), ~std::uint64_t{0});
  for (unsigned a = 2; a <= 4; ++a) {
    const std::uint64_t x = max_inline_psi_base(a);
    EXPECT_LT(closed_form(x, a), limit) << a;
    EXPECT_GE(closed_form(Big(x) + 1, a), limit) << a;
  }
  // Every one of the first 10^5 primes keeps psi(p^3) in 128 bits.
  EXPECT_GE(max_inline_psi_base(3), 1299709u);
}

TEST(Conditions, CatalogShape) {
  EXPECT_EQ(condition_family(ConditionFamily::kP1).size(), 4u);
  EXPECT_EQ(condition_family(ConditionFamily::kP2).size(), 3u);
  EXPECT_EQ(condition_family(ConditionFamily::kP3).size(), 9u);
  EXPECT_EQ(all_conditions().size(), 16u);
  EXPECT_EQ(find_condition("psi_p_div_psi_q").relations.size(), 1u);
  EXPECT_THROW(find_condition("nope"), std::invalid_argument);
}

TEST(Conditions, ProfilesOfSmallPairs) {
  const auto p23 = condition_profile(Natural{2u}, Natural{3u});
  EXPECT_FALSE(p23.p1_any);
  EXPECT_FALSE(p23.p2_any);
  EXPECT_FALSE(p23.p3_any);

  const auto p25 = condition_profile(Natural{2u}, Natural{5u});
  EXPECT_TRUE(p25.p1_any);
  EXPECT_TRUE(p25.grid[0][0]);  // 3 | 21

  const auto p27 = condition_profile(Natural{2u}, Natural{7u});
  EXPECT_TRUE(p27.holds(find_condition("p2_conj3")));
  const auto p72 = condition_profile(Natural{7u}, Natural{2u});
  EXPECT_TRUE(p72.holds(find_condition("p3_conj8")));

  EXPECT_THROW(condition_profile(Natural{3u}, Natural{3u}), std::invalid_argument);
  EXPECT_THROW(condition_profile(Natural{4u}, Natural{3u}), std::invalid_argument);
}

TEST(Conditions, GridMatchesDirectDivisibility) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
      if (p == q) continue;
      const auto prof = condition_profile(Natural{p}, Natural{q});
      for (unsigned i = 1; i <= 3; ++i) {
        for (unsigned j = 1; j <= 3; ++j) {
          const Big pi = closed_form(p, i);
          const Big qj = closed_form(q, j);
          const Big qi = closed_form(q, i);
          const Big pj = closed_form(p, j);
          ASSERT_EQ(prof.grid[i - 1][j - 1], qj % pi == 0);
          ASSERT_EQ(prof.grid_rev[i - 1][j - 1], pj % qi == 0);
        }
      }
    }
  }
}

}  // namespace
}  // namespace psigraph
