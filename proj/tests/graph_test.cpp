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
#include <set>
#include <stdexcept>
#include <utility>

#include <gtest/gtest.h>

#include "psigraph/analysis.hpp"
#include "psigraph/graph.hpp"

namespace psigraph {
namespace {

std::uint64_t residue_order_sum(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t k = 0; k < n; ++k) s += n / std::gcd(n, k);
  return s;
}

// Edge set of the cyclic graph as pairs of orders, straight from the definition.
std::set<std::pair<std::uint64_t, std::uint64_t>> reference_edges(std::uint64_t n) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d) continue;
    for (std::uint64_t e = d + 1; e <= n; ++e) {
      if (n % e || e % d) continue;
      if (residue_order_sum(e) % residue_order_sum(d) == 0) out.insert({d, e});
    }
  }
  return out;
}

std::set<std::pair<std::uint64_t, std::uint64_t>> edge_orders(const PsiGraph& g) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& e : g.edges()) {
    out.insert({*g.vertex(e.u).order.to_u64(), *g.vertex(e.v).order.to_u64()});
  }
  return out;
}

TEST(CyclicGraph, SmallExamples) {
  const PsiGraph g6 = build_cyclic(factorize(std::uint64_t{6}));
  EXPECT_EQ(g6.vertex_count(), 3u);
  EXPECT_EQ(g6.edge_count(), 2u);
  EXPECT_EQ(g6.name(), "psi_6");
  EXPECT_EQ(g6.vertex(2).label, "6");
  EXPECT_TRUE(g6.adjacent(0, 2));
  EXPECT_FALSE(g6.adjacent(0, 1));

  const PsiGraph g4 = build_cyclic(factorize(std::uint64_t{4}));
  EXPECT_EQ(g4.edge_count(), 0u);  // 3 does not divide 11

  const PsiGraph g2 = build_cyclic(factorize(std::uint64_t{2}));
  EXPECT_EQ(g2.vertex_count(), 1u);

  EXPECT_THROW(build_cyclic(factorize(std::uint64_t{1})), std::invalid_argument);
}

TEST(CyclicGraph, EdgesMatchDefinition) {
  for (std::uint64_t n = 2; n <= 400; ++n) {
    const PsiGraph g = build_cyclic(factorize(n));
    ASSERT_EQ(g.vertex_count(), tau(n) - 1) << n;
    ASSERT_EQ(edge_orders(g), reference_edges(n)) << n;
  }
}

TEST(CyclicGraph, VertexPsiValues) {
  const PsiGraph g = build_cyclic(factorize(std::uint64_t{360}));
  for (const auto& v : g.vertices()) {
    ASSERT_EQ(v.psi, Natural{residue_order_sum(*v.order.to_u64())}) << v.label;
  }
  ASSERT_TRUE(g.find(Natural{12u}).has_value());
  EXPECT_FALSE(g.find(Natural{7u}).has_value());
}

TEST(CyclicGraph, LargeExponentsStayExact) {
  const Factorization f({{Natural{2u}, 200}});
  const PsiGraph g = build_cyclic(f);
  EXPECT_EQ(g.vertex_count(), 200u);
  // 2^a -- 2^b exactly when (2a+1) | (2b+1).
  for (const auto& e : g.edges()) {
    const unsigned a = g.vertex(e.u).exponents[0];
    const unsigned b = g.vertex(e.v).exponents[0];
    ASSERT_EQ((2 * b + 1) % (2 * a + 1), 0u);
  }
}

TEST(GroupGraph, CyclicPathAgreesWithTableBuild) {
  for (std::size_t n = 2; n <= 128; ++n) {
    const PsiGraph a = build_cyclic(factorize(std::uint64_t{n}));
    const PsiGraph b = build_from_group(cyclic_group(n));
    ASSERT_TRUE(isomorphic_by_order(a, b)) << n;
    ASSERT_EQ(edge_orders(a), edge_orders(b)) << n;
  }
}

TEST(GroupGraph, QuaternionAndKlein) {
  const PsiGraph q8 = build_from_group(quaternion_group(8));
  EXPECT_EQ(q8.vertex_count(), 5u);
  EXPECT_FALSE(has_universal_vertex(q8));

  const std::vector<std::uint64_t> v4{2, 2};
  const PsiGraph k = build_from_group(abelian_group(v4));
  EXPECT_EQ(k.vertex_count(), 4u);
  EXPECT_EQ(k.edge_count(), 0u);  // psi = 3 for each C2, 7 for the whole group
  EXPECT_EQ(k.name(), "psi_abelian_2_2");
}

TEST(GroupGraph, ContainmentOnlyIsASupergraph) {
  BuildOptions loose;
  loose.edge_rule = EdgeRule::kContainmentOnly;
  for (const auto& grp : {dihedral_group(6), quaternion_group(16), direct_product(dihedral_group(3), cyclic_group(3))}) {
    const PsiGraph strict = build_from_group(grp);
    const PsiGraph all = build_from_group(grp, loose);
    ASSERT_EQ(strict.vertex_count(), all.vertex_count());
    for (const auto& e : strict.edges()) ASSERT_TRUE(all.adjacent(e.u, e.v));
    for (const auto& e : all.edges()) {
      ASSERT_EQ(strict.adjacent(e.u, e.v), divides(all.vertex(e.u).psi, all.vertex(e.v).psi));
    }
  }
}

TEST(GroupGraph, EdgesJoinNestedSubgroups) {
  const FiniteGroup grp = direct_product(quaternion_group(8), cyclic_group(2));
  const auto subs = enumerate_subgroups(grp);
  const PsiGraph g = build_from_group(grp);
  for (const auto& e : g.edges()) {
    const auto& h = subs[g.vertex(e.u).subgroup_index];
    const auto& k = subs[g.vertex(e.v).subgroup_index];
    ASSERT_TRUE(h.is_subset_of(k));
    ASSERT_LT(h.order(), k.order());
  }
}

}  // namespace
}  // namespace psigraph
