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

// Randomized invariants with fixed seeds.

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "psigraph/analysis.hpp"
#include "psigraph/graph.hpp"
#include "psigraph/psi.hpp"

namespace psigraph {
namespace {

TEST(Property, PsiIsMultiplicative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> dist(1, 2'000'000);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t a = dist(rng);
    const std::uint64_t b = dist(rng);
    if (std::gcd(a, b) != 1) continue;
    ASSERT_EQ(psi_cyclic(factorize(a * b)), psi_cyclic(factorize(a)) * psi_cyclic(factorize(b))) << a << " " << b;
  }
}

TEST(Property, PrimePowerDivisibilityRule) {
  std::mt19937 rng(5);
  const PrimeTable primes = sieve_primes(2000);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<unsigned> exp(1, 40);
  for (int i = 0; i < 800; ++i) {
    const Natural p{primes[pick(rng)]};
    const unsigned a = exp(rng), b = exp(rng);
    ASSERT_EQ(divides(psi_prime_power(p, a), psi_prime_power(p, b)), (2 * b + 1) % (2 * a + 1) == 0)
        << p << " " << a << " " << b;
  }
}

TEST(Property, NaturalAgreesWithCppIntUnderScopes) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Natural a{rng()};
    const Natural b{rng() | 1};
    const Natural fast = a * a * b + a % b;
    UnboundedScope scope;
    const Natural slow = a * a * b + a % b;
    ASSERT_EQ(fast, slow);
    ASSERT_EQ(fast.to_big(), slow.to_big());
  }
}

TEST(Property, GraphInvariants) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::uint64_t> dist(2, 50000);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = dist(rng);
    const PsiGraph g = build_cyclic(factorize(n));
    std::size_t degree_sum = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      degree_sum += degree(g, v);
      for (std::size_t w : g.neighbors(v)) ASSERT_TRUE(g.adjacent(w, v));
    }
    ASSERT_EQ(degree_sum, 2 * g.edge_count());
    for (const auto& e : g.edges()) {
      ASSERT_TRUE(divides(g.vertex(e.u).order, g.vertex(e.v).order));
      ASSERT_TRUE(divides(g.vertex(e.u).psi, g.vertex(e.v).psi));
    }
    // Square-free orders: n itself is adjacent to every other vertex.
    if (factorize(n).is_square_free()) ASSERT_TRUE(has_universal_vertex(g)) << n;
    ASSERT_EQ(!girth(g).has_value(), is_forest(g)) << n;
    if (girth(g) && *girth(g) % 2 == 1) ASSERT_FALSE(is_bipartite(g)) << n;
    if (!girth(g) && g.vertex_count() >= 2) ASSERT_TRUE(is_bipartite(g)) << n;
  }
}

}  // namespace
}  // namespace psigraph
