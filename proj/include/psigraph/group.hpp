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

#ifndef PSIGRAPH_GROUP_HPP
#define PSIGRAPH_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "psigraph/natural.hpp"

namespace psigraph {

/// Raised when a configured size limit would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupLimits {
  std::size_t max_order = 512;
  std::size_t max_subgroups = 10'000;
};

using Element = std::uint32_t;

/// A finite group given by its full composition table. Element 0 is the
/// identity. Immutable once constructed.
class FiniteGroup {
 public:
  /// Validates the table: identity row/column, Latin square, and
  /// associativity (exhaustive up to order 64, sampled above).
  FiniteGroup(std::size_t order, std::vector<Element> table, std::string label);

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const;
  FiniteGroup with_label(std::string label) const;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::string label_;
};

FiniteGroup cyclic_group(std::size_t n, const GroupLimits& limits = {});
/// Dihedral group of order 2n (symmetries of the n-gon).
FiniteGroup dihedral_group(std::size_t n, const GroupLimits& limits = {});
/// Generalized quaternion group of the given order 2^k, k >= 3.
FiniteGroup quaternion_group(std::size_t order, const GroupLimits& limits = {});
/// Direct product of cyclic groups of the listed prime-power orders.
FiniteGroup abelian_group(std::span<const std::uint64_t> prime_powers, const GroupLimits& limits = {});
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const GroupLimits& limits = {});

/// o(x) for every element, indexed by element.
std::vector<std::uint64_t> element_orders(const FiniteGroup& g);

/// Sum of element orders.
Natural psi_group(const FiniteGroup& g);

class Subgroup {
 public:
  explicit Subgroup(std::vector<Element> elements);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element x) const;
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  std::vector<Element> elements_;  // sorted
};

/// Every subgroup exactly once, sorted by (order, elements). The trivial
/// subgroup comes first and the whole group last.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, const GroupLimits& limits = {});

/// Sum of element orders of a subgroup of g.
Natural psi_subgroup(const Subgroup& h, std::span<const std::uint64_t> orders);

/// psi(H) | psi(G) for every subgroup H.
bool is_psi_divisible(const FiniteGroup& g, const GroupLimits& limits = {});

bool is_abelian(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);

}  // namespace psigraph

#endif  // PSIGRAPH_GROUP_HPP
