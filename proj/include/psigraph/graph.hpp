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

#ifndef PSIGRAPH_GRAPH_HPP
#define PSIGRAPH_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psigraph/arith.hpp"
#include "psigraph/group.hpp"
#include "psigraph/natural.hpp"

namespace psigraph {

/// A non-trivial subgroup. On the cyclic path it is identified with the
/// divisor d of n (`order`) and its exponent vector over the primes of n; on
/// the generic path with its index in enumerate_subgroups().
struct Vertex {
  std::string label;
  Natural order;
  Natural psi;
  std::vector<unsigned> exponents;
  std::size_t subgroup_index = 0;
};

struct Edge {
  std::size_t u = 0;  // u < v
  std::size_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Which edge rule to apply between comparable subgroups H < K.
enum class EdgeRule {
  kPsiDivisibility,  // psi(H) | psi(K)
  kContainmentOnly,  // deliberately wrong; lets tests check that verifiers can fail
};

struct BuildOptions {
  EdgeRule edge_rule = EdgeRule::kPsiDivisibility;
  GroupLimits limits{};
};

/// Simple undirected graph on the non-trivial subgroups of a finite group.
class PsiGraph {
 public:
  PsiGraph(std::string name, std::vector<Vertex> vertices, std::vector<Edge> edges,
           std::optional<Factorization> cyclic_order = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t v) const;
  /// Sorted by (u, v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted ascending.
  const std::vector<std::size_t>& neighbors(std::size_t v) const;
  bool adjacent(std::size_t a, std::size_t b) const;

  /// Factorization of n when built on the cyclic path.
  const std::optional<Factorization>& cyclic_order() const { return cyclic_order_; }

  /// Vertex with the given order. On the cyclic path orders are unique.
  std::optional<std::size_t> find(const Natural& order) const;

 private:
  std::string name_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::optional<Factorization> cyclic_order_;
};

/// psi graph of C_n over the divisors d > 1 of n. Rejects n = 1.
PsiGraph build_cyclic(const Factorization& f, const BuildOptions& options = {});

/// psi graph over the enumerated subgroups of g. Propagates CapExceeded.
PsiGraph build_from_group(const FiniteGroup& g, const BuildOptions& options = {});

}  // namespace psigraph

#endif  // PSIGRAPH_GRAPH_HPP
