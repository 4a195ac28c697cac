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

#include <set>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "psigraph/parse.hpp"
#include "psigraph/theorems.hpp"

namespace psigraph {
namespace {

std::size_t partitions(unsigned n) {
  std::vector<std::size_t> p(n + 1, 0);
  p[0] = 1;
  for (unsigned part = 1; part <= n; ++part) {
    for (unsigned k = part; k <= n; ++k) p[k] += p[k - part];
  }
  return p[n];
}

// Number of abelian groups of order n: product of p(e) over the exponents of n.
std::size_t abelian_count(std::uint64_t n) {
  std::size_t c = 1;
  for (std::uint64_t d = 2; d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    c *= partitions(e);
  }
  return c;
}

// Cyclic instances can be far beyond the table-based group cap, so they are
// replayed through the order parser.
std::size_t replay_order(const std::string& instance) {
  if (instance.starts_with("cyclic:")) {
    return static_cast<std::size_t>(parse_order(instance.substr(7)).divisor_count());
  }
  return parse_group(instance).order();
}

class AllStatements : public ::testing::TestWithParam<std::string> {};

TEST_P(AllStatements, PassOnDefaultFamilies) {
  const VerificationReport r = verify(GetParam());
  EXPECT_TRUE(r.passed()) << to_json(r).dump(2);
  EXPECT_GT(r.instances_checked, 0u);
  EXPECT_FALSE(r.bounds.empty());
  EXPECT_EQ(r.statement_id, GetParam());
}

INSTANTIATE_TEST_SUITE_P(Verify, AllStatements,
                         ::testing::Values("complete-graph", "degree-formula", "cycle", "bipartite", "girth",
                                           "connectivity", "tree", "nonplanar", "universal-vertex",
                                           "abelian-divisible"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s) c = c == '-' ? '_' : c;
                           return s;
                         });

TEST(Verify, WrongEdgeRuleIsCaught) {
  VerifyParams broken;
  broken.edge_rule = EdgeRule::kContainmentOnly;
  for (const char* id : {"degree-formula", "cycle", "universal-vertex", "connectivity", "complete-graph"}) {
    const VerificationReport r = verify(id, broken);
    EXPECT_FALSE(r.passed()) << id;
    for (const auto& f : r.failures) {
      EXPECT_NE(f.expected, f.actual);
      EXPECT_NO_THROW(replay_order(f.instance)) << f.instance;
    }
  }
}

TEST(Verify, GirthObservations) {
  const VerificationReport r = verify("girth");
  const auto& hist = r.observations["girth_histogram"];
  std::set<std::string> keys;
  for (const auto& [k, v] : hist.items()) keys.insert(k);
  EXPECT_EQ(keys, (std::set<std::string>{"3", "4", "8", "inf"}));
  const auto& wit = r.observations["girth_witnesses"];
  for (const char* k : {"3", "4", "8", "inf"}) {
    ASSERT_TRUE(wit.contains(k)) << k;
    EXPECT_NO_THROW(replay_order(wit[k].get<std::string>())) << wit[k];
  }
}

TEST(Verify, UniversalVertexCoversTheCatalog) {
  const VerificationReport r = verify("universal-vertex");
  EXPECT_GE(r.instances_checked, 40u);
  EXPECT_EQ(r.instances_checked, group_catalog(VerifyParams{}).size());
}

TEST(Verify, AbelianDivisibleObservations) {
  const VerificationReport r = verify("abelian-divisible");
  EXPECT_EQ(r.observations["smallest_non_divisible_order"], 4);
  EXPECT_EQ(r.observations["cyclic_orders_scanned"], 99999);  // n = 2 .. 10^5
}

TEST(Verify, Deterministic) {
  const auto a = to_json(verify("degree-formula"));
  const auto b = to_json(verify("degree-formula", VerifyParams{.threads = 1}));
  EXPECT_EQ(a, b);
}

TEST(Verify, AliasesAndLookup) {
  EXPECT_EQ(find_statement("thm2.10").id, "universal-vertex");
  EXPECT_EQ(find_statement("girth").alias, "cor2.6");
  EXPECT_EQ(statements().size(), 10u);
  EXPECT_THROW(find_statement("nope"), std::invalid_argument);
  EXPECT_THROW(verify("nope"), std::invalid_argument);
  EXPECT_EQ(verify("prop2.4").statement_id, "cycle");
}

TEST(Verify, CapsAreEnforced) {
  VerifyParams p;
  p.max_exponent = 13;
  EXPECT_THROW(verify("cycle", p), CapExceeded);
  p = {};
  p.max_order = 100000;
  EXPECT_THROW(verify("universal-vertex", p), CapExceeded);
  p = {};
  p.max_n = 100'000'000;
  EXPECT_THROW(verify("abelian-divisible", p), CapExceeded);
  p = {};
  p.primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  EXPECT_THROW(verify("cycle", p), CapExceeded);
}

TEST(Catalog, AbelianTypesMatchPartitionCount) {
  const auto types = abelian_types(64);
  std::size_t expected = 0;
  for (std::uint64_t n = 1; n <= 64; ++n) expected += abelian_count(n);
  // The trivial group has no type.
  EXPECT_EQ(types.size() + 1, expected);
}

TEST(Catalog, Contents) {
  const auto groups = group_catalog(VerifyParams{});
  std::set<std::string> labels;
  for (const auto& g : groups) labels.insert(g.label());
  EXPECT_EQ(labels.size(), groups.size());
  EXPECT_TRUE(labels.count("cyclic:200"));
  EXPECT_TRUE(labels.count("quaternion:64"));
  EXPECT_TRUE(labels.count("dihedral:32"));
  EXPECT_TRUE(labels.count("abelian:2,2"));
  for (const auto& g : groups) {
    if (g.label().starts_with("cyclic:")) continue;
    EXPECT_LE(g.order(), 64u) << g.label();
    EXPECT_EQ(parse_group(g.label()).order(), g.order()) << g.label();
  }
}

}  // namespace
}  // namespace psigraph
