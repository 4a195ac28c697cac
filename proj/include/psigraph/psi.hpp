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

#ifndef PSIGRAPH_PSI_HPP
#define PSIGRAPH_PSI_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "psigraph/arith.hpp"
#include "psigraph/natural.hpp"

namespace psigraph {

/// Sum of element orders of the cyclic group of order p^a, computed as the
/// alternating sum p^{2a} - p^{2a-1} + ... + 1. Rejects non-prime p.
Natural psi_prime_power(const Natural& p, unsigned a);

/// Sum of element orders of C_n from the factorization of n (multiplicative).
Natural psi_cyclic(const Factorization& f);

/// Independent route: sum over d | n of d * phi(d).
Natural psi_cyclic_oracle(const Natural& n);

/// psi(p^a) | psi(p^b) for any prime p, decided by (2a+1) | (2b+1).
bool prime_power_psi_divides(unsigned a, unsigned b);

/// Largest integer base x with psi(x^a), as the alternating sum, below 2^128.
std::uint64_t max_inline_psi_base(unsigned a);

/// One divisibility relation between powers of an ordered prime pair (p, q).
/// Forward: psi(p^lhs) | psi(q^rhs). Reverse: psi(q^lhs) | psi(p^rhs).
struct Relation {
  bool reverse = false;
  unsigned lhs = 1;
  unsigned rhs = 1;
};

/// A conjunction of one or two relations, identified by a stable name.
struct Condition {
  std::string_view id;
  std::string_view text;
  std::vector<Relation> relations;
};

enum class ConditionFamily { kP1, kP2, kP3 };

/// The relation families exactly as displayed in the source lists: four
/// single relations, three conjunctions and nine conjunctions.
const std::vector<Condition>& condition_family(ConditionFamily family);

/// Every scannable condition: the P1 relations (with the aliases
/// psi_p_div_psi_q and psi_p_div_psi_q2), p2_conj1..3, p3_conj1..9.
const std::vector<Condition>& all_conditions();
/// Throws std::invalid_argument for unknown ids.
const Condition& find_condition(std::string_view id);

struct ConditionProfile {
  Natural p;
  Natural q;
  /// grid[i-1][j-1] = psi(p^i) | psi(q^j), i, j in 1..3.
  std::array<std::array<bool, 3>, 3> grid{};
  /// grid_rev[i-1][j-1] = psi(q^i) | psi(p^j).
  std::array<std::array<bool, 3>, 3> grid_rev{};
  bool p1_any = false;
  bool p2_any = false;
  bool p3_any = false;

  bool holds(const Relation& r) const;
  bool holds(const Condition& c) const;
};

/// Rejects p == q or composite input.
ConditionProfile condition_profile(const Natural& p, const Natural& q);

}  // namespace psigraph

#endif  // PSIGRAPH_PSI_HPP
