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

#include "psigraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "psigraph/psi.hpp"

namespace psigraph {

PsiGraph::PsiGraph(std::string name, std::vector<Vertex> vertices, std::vector<Edge> edges,
                   std::optional<Factorization> cyclic_order)
    : name_(std::move(name)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      adjacency_(vertices_.size()),
      cyclic_order_(std::move(cyclic_order)) {
  for (auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("PsiGraph: self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= vertices_.size()) throw std::out_of_range("PsiGraph: edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

const Vertex& PsiGraph::vertex(std::size_t v) const {
  if (v >= vertices_.size()) throw std::out_of_range("PsiGraph: unknown vertex " + std::to_string(v));
  return vertices_[v];
}

const std::vector<std::size_t>& PsiGraph::neighbors(std::size_t v) const {
  if (v >= adjacency_.size()) throw std::out_of_range("PsiGraph: unknown vertex " + std::to_string(v));
  return adjacency_[v];
}

bool PsiGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto& list = neighbors(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::optional<std::size_t> PsiGraph::find(const Natural& order) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].order == order) return i;
  }
  return std::nullopt;
}

PsiGraph build_cyclic(const Factorization& f, const BuildOptions& options) {
  if (f.empty()) throw std::invalid_argument("build_cyclic: n must be at least 2");
  const auto& parts = f.parts();
  const std::size_t k = parts.size();

  // psi(p_i^e) and p_i^e for every prime of n and every e up to its exponent.
  std::vector<std::vector<Natural>> psi_table(k);
  std::vector<std::vector<Natural>> power_table(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (unsigned e = 0; e <= parts[i].exponent; ++e) {
      psi_table[i].push_back(psi_prime_power(parts[i].prime, e));
      power_table[i].push_back(pow(parts[i].prime, e));
    }
  }

  std::vector<Vertex> vertices;
  std::vector<unsigned> exps(k, 0);
  while (true) {
    std::size_t i = 0;
    while (i < k && exps[i] == parts[i].exponent) exps[i++] = 0;
    if (i == k) break;
    ++exps[i];
    Vertex v;
    v.order = Natural{1};
    v.psi = Natural{1};
    for (std::size_t j = 0; j < k; ++j) {
      v.order *= power_table[j][exps[j]];
      v.psi *= psi_table[j][exps[j]];
    }
    v.exponents = exps;
    v.label = v.order.to_string();
    vertices.push_back(std::move(v));
  }
  std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) { return a.order < b.order; });

  std::vector<Edge> edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      bool contained = true;
      for (std::size_t j = 0; j < k && contained; ++j) {
        contained = vertices[a].exponents[j] <= vertices[b].exponents[j];
      }
      if (!contained) continue;
      if (options.edge_rule == EdgeRule::kContainmentOnly || divides(vertices[a].psi, vertices[b].psi)) {
        edges.push_back({a, b});
      }
    }
  }
  return PsiGraph("psi_" + f.value().to_string(), std::move(vertices), std::move(edges), f);
}

PsiGraph build_from_group(const FiniteGroup& g, const BuildOptions& options) {
  const auto subgroups = enumerate_subgroups(g, options.limits);
  const auto orders = element_orders(g);

  std::vector<Vertex> vertices;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (subgroups[i].order() == 1) continue;
    Vertex v;
    v.order = Natural{static_cast<std::uint64_t>(subgroups[i].order())};
    v.psi = psi_subgroup(subgroups[i], orders);
    v.subgroup_index = i;
    v.label = v.order.to_string() + ":" + std::to_string(i);
    vertices.push_back(std::move(v));
    source.push_back(i);
  }

  // Membership bitsets make the containment test a few word operations.
  const std::size_t words = (g.order() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(vertices.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (Element x : subgroups[source[a]].elements()) bits[a][x / 64] |= std::uint64_t{1} << (x % 64);
  }
  auto subset = [&](std::size_t a, std::size_t b) {
    for (std::size_t w = 0; w < words; ++w) {
      if ((bits[a][w] & ~bits[b][w]) != 0) return false;
    }
    return true;
  };

  std::vector<Edge> edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    const std::size_t h = subgroups[source[a]].order();
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const std::size_t k = subgroups[source[b]].order();
      // Sorted by order, so only H < K is possible.
      if (h == k || k % h != 0 || !subset(a, b)) continue;
      if (options.edge_rule == EdgeRule::kContainmentOnly || divides(vertices[a].psi, vertices[b].psi)) {
        edges.push_back({a, b});
      }
    }
  }
  std::string name = "psi_" + g.label();
  for (char& c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  }
  return PsiGraph(std::move(name), std::move(vertices), std::move(edges));
}

}  // namespace psigraph
