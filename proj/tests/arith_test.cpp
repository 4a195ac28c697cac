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

#include "psigraph/arith.hpp"

namespace psigraph {
namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(Primality, AgreesWithTrialDivisionBelow100000) {
  for (std::uint64_t n = 0; n < 100000; ++n) ASSERT_EQ(is_prime(n), trial_prime(n)) << n;
}

TEST(Primality, LargeKnownValues) {
  EXPECT_TRUE(is_prime(std::uint64_t{2305843009213693951}));  // 2^61 - 1
  EXPECT_FALSE(is_prime(std::uint64_t{3215031751}));          // strong pseudoprime to 2, 3, 5, 7
  EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557u}));
  EXPECT_FALSE(is_prime(std::uint64_t{18446744073709551615u}));
}

TEST(Primality, RefusesAboveTheDeterministicRange) {
  EXPECT_THROW(is_prime(Natural::parse("170141183460469231731687303715884105727")), std::domain_error);
}

TEST(Primality, BigInputsInsideTheDeterministicRange) {
  EXPECT_TRUE(is_prime(Natural::parse("18446744073709551629")));   // 2^64 + 13
  EXPECT_FALSE(is_prime(Natural::parse("18446744073709551617")));  // 2^64 + 1 = 274177 * 67280421310721
  EXPECT_TRUE(is_prime(Natural::parse("2305843009213693951")));
  EXPECT_FALSE(is_prime(Natural::parse("3317044064679887385961980")));  // even
}

TEST(Factorize, ReconstructsTheInput) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const Factorization f = factorize(n);
    ASSERT_EQ(f.value(), Natural{n});
    for (const auto& pp : f.parts()) ASSERT_TRUE(trial_prime(pp.prime.to_u64().value()));
  }
  const std::uint64_t semiprime = 4294967291ull * 4294967279ull;
  const Factorization f = factorize(semiprime);
  ASSERT_EQ(f.prime_count(), 2u);
  EXPECT_EQ(f.parts()[0].prime, Natural{4294967279ull});
  EXPECT_EQ(f.value(), Natural{semiprime});
}

TEST(Factorize, FactoredFormAndPredicates) {
  const Factorization f = factorize(std::uint64_t{360});
  EXPECT_EQ(f.to_string(), "2^3*3^2*5");
  EXPECT_EQ(f.divisor_count(), 24u);
  EXPECT_FALSE(f.is_square_free());
  EXPECT_TRUE(factorize(std::uint64_t{210}).is_square_free());
  EXPECT_EQ(factorize(std::uint64_t{1}).to_string(), "1");
  EXPECT_TRUE(factorize(std::uint64_t{1}).empty());
  EXPECT_THROW(factorize(std::uint64_t{0}), std::invalid_argument);
}

TEST(Factorization, ValidatesParts) {
  EXPECT_THROW(Factorization({{Natural{4u}, 1}}), std::invalid_argument);
  EXPECT_THROW(Factorization({{Natural{3u}, 1}, {Natural{2u}, 1}}), std::invalid_argument);
  EXPECT_THROW(Factorization({{Natural{2u}, 0}}), std::invalid_argument);
  const Factorization big({{Natural{2u}, 200}});
  EXPECT_EQ(big.value(), pow(Natural{2u}, 200));
}

TEST(Divisors, MatchBruteForce) {
  for (std::uint64_t n = 1; n <= 600; ++n) {
    std::vector<Natural> expected;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) expected.emplace_back(d);
    }
    ASSERT_EQ(divisors(factorize(n)), expected) << n;
    ASSERT_EQ(tau(n), expected.size());
  }
}

TEST(Totient, MatchesCoprimeCount) {
  for (std::uint64_t n = 1; n <= 600; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    ASSERT_EQ(totient(factorize(n)), Natural{count}) << n;
  }
}

TEST(Sieve, FirstPrimes) {
  const PrimeTable p = sieve_primes(10000);
  ASSERT_EQ(p.size(), 10000u);
  EXPECT_EQ(p.front(), 2u);
  EXPECT_EQ(p[9], 29u);
  EXPECT_EQ(p.back(), 104729u);
  EXPECT_EQ(sieve_primes(100000).back(), 1299709u);
  EXPECT_EQ(sieve_primes(1), PrimeTable{2});
  EXPECT_THROW(sieve_primes(0), std::invalid_argument);
}

}  // namespace
}  // namespace psigraph
