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

#ifndef PSIGRAPH_ANALYSIS_HPP
#define PSIGRAPH_ANALYSIS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "psigraph/arith.hpp"
#include "psigraph/graph.hpp"

namespace psigraph {

// Graph analyzers. Distances and girth use std::nullopt for infinity.
//
// Conventions for the one-vertex graph K1: connected, diameter 0, girth
// infinite, a tree, complete, with a universal vertex, and without isolated
// vertices (its single vertex is the whole graph).

std::size_t degree(const PsiGraph& g, std::size_t v);
/// Ascending.
std::vector<std::size_t> degree_sequence(const PsiGraph& g);

/// Closed-form degree of C_{p^beta} in the graph of C_{p^alpha}.
std::int64_t degree_formula_prime_power(unsigned alpha, unsigned beta);

/// Closed-form degree of the Sylow vertex for prime index i of f.
/// Requires at least two primes.
std::int64_t degree_formula_sylow(const Factorization& f, std::size_t i);

/// Each component sorted ascending; components ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const PsiGraph& g);
bool is_connected(const PsiGraph& g);
/// Maximum eccentricity; nullopt when disconnected. 0 for K1.
std::optional<std::size_t> diameter(const PsiGraph& g);
/// Diameter of each component, in connected_components() order.
std::vector<std::size_t> component_diameters(const PsiGraph& g);

std::vector<std::size_t> isolated_vertices(const PsiGraph& g);
/// Number of alpha in [1, n] with 2*alpha+1 prime and 3*(2*alpha+1) > 2n+1;
/// 0 for n = 1.
std::size_t isolated_count_prime_power(unsigned n);

struct TwoColoring {
  bool colorable = false;
  /// Both parts non-empty whenever the graph has at least two vertices.
  std::array<std::vector<std::size_t>, 2> parts;
  /// Closed odd cycle v0, v1, ..., v_{k-1} (v_{k-1} adjacent to v0) when not colorable.
  std::vector<std::size_t> odd_cycle;
};

TwoColoring two_coloring(const PsiGraph& g);
/// Two-colorable with two non-empty parts (so at least two vertices).
bool is_bipartite(const PsiGraph& g);

std::optional<std::size_t> girth(const PsiGraph& g);

bool is_forest(const PsiGraph& g);
bool is_tree(const PsiGraph& g);
bool is_path(const PsiGraph& g);
bool is_cycle(const PsiGraph& g);
bool is_complete(const PsiGraph& g);
std::vector<std::size_t> universal_vertices(const PsiGraph& g);
bool has_universal_vertex(const PsiGraph& g);

/// |E| > 3|V| - 6 with |V| >= 3: a sufficient certificate of non-planarity.
bool euler_nonplanar(const PsiGraph& g);

/// Exact clique number by branch and bound. Throws CapExceeded above `vertex_cap`.
std::size_t max_clique_size(const PsiGraph& g, std::size_t vertex_cap = 64);

enum class Shape { kComplete, kCycle, kPath, kTree, kOther };
Shape shape(const PsiGraph& g);
std::string_view shape_name(Shape s);

/// True when both graphs have pairwise distinct vertex orders and the same
/// edge set once every vertex is replaced by its order.
bool isomorphic_by_order(const PsiGraph& a, const PsiGraph& b);

}  // namespace psigraph

#endif  // PSIGRAPH_ANALYSIS_HPP
