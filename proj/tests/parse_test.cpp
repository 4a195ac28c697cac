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

#include <stdexcept>

#include <gtest/gtest.h>

#include "psigraph/parse.hpp"

namespace psigraph {
namespace {

TEST(ParseOrder, DecimalAndFactored) {
  EXPECT_EQ(parse_order("360").to_string(), "2^3*3^2*5");
  EXPECT_EQ(parse_order("2^3*3^2*5").value(), Natural{360u});
  EXPECT_EQ(parse_order("3*2^3*3").to_string(), "2^3*3^2");
  EXPECT_EQ(parse_order("6^2").to_string(), "2^2*3^2");
  EXPECT_EQ(parse_order("1").to_string(), "1");
  EXPECT_EQ(parse_order("2^200").parts()[0].exponent, 200u);
  EXPECT_EQ(parse_order("340282366920938463463374607431768211456").to_string(), "2^128");
}

TEST(ParseOrder, Rejects) {
  for (const char* bad : {"", "0", "2^0", "2^", "^3", "2**3", "2*", "*2", "x", "2^-1", "2^70000", "0^2", " 6"}) {
    EXPECT_THROW(parse_order(bad), std::invalid_argument) << bad;
  }
}

TEST(ParseGroup, Kinds) {
  EXPECT_EQ(parse_group("cyclic:12").order(), 12u);
  EXPECT_EQ(parse_group("cyclic:2^2*3").label(), "cyclic:12");
  EXPECT_EQ(parse_group("dihedral:5").order(), 10u);
  EXPECT_EQ(parse_group("quaternion:2^4").order(), 16u);
  EXPECT_EQ(parse_group("abelian:2^2,2,3").order(), 24u);
  const FiniteGroup p = parse_group("product:dihedral:3xcyclic:3");
  EXPECT_EQ(p.order(), 18u);
  EXPECT_EQ(p.label(), "product:dihedral:3xcyclic:3");
  EXPECT_EQ(parse_group("product:product:quaternion:8xcyclic:2xcyclic:3").order(), 48u);
}

TEST(ParseGroup, LabelsRoundTrip) {
  for (const char* spec : {"cyclic:30", "dihedral:7", "quaternion:32", "abelian:2,2,2", "abelian:2^2,3",
                           "product:quaternion:8xcyclic:5"}) {
    const FiniteGroup g = parse_group(spec);
    EXPECT_EQ(parse_group(g.label()).order(), g.order()) << spec;
  }
}

TEST(ParseGroup, Rejects) {
  for (const char* bad : {"", "cyclic", "cyclic:", "cyclic:0", "foo:3", "abelian:6", "abelian:", "quaternion:12",
                          "product:cyclic:2", "product:cyclic:2xfoo:3"}) {
    EXPECT_THROW(parse_group(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(parse_group("cyclic:1024"), CapExceeded);
  EXPECT_THROW(parse_group("cyclic:2^80"), CapExceeded);
  EXPECT_NO_THROW(parse_group("cyclic:1024", GroupLimits{.max_order = 1024}));
}

TEST(ParsePrimes, List) {
  EXPECT_EQ(parse_prime_list("7,2,3,7"), (std::vector<std::uint64_t>{2, 3, 7}));
  EXPECT_THROW(parse_prime_list("2,4"), std::invalid_argument);
  EXPECT_THROW(parse_prime_list("2,,3"), std::invalid_argument);
  EXPECT_THROW(parse_prime_list(""), std::invalid_argument);
  EXPECT_THROW(parse_prime_list("2;3"), std::invalid_argument);
}

}  // namespace
}  // namespace psigraph
