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

#include "psigraph/analysis.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace psigraph {

namespace {

constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const PsiGraph& g, std::size_t root) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnseen);
  std::vector<std::size_t> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t u = queue[head];
    for (std::size_t w : g.neighbors(u)) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t eccentricity(const PsiGraph& g, std::size_t v) {
  std::size_t ecc = 0;
  for (std::size_t d : bfs_distances(g, v)) {
    if (d != kUnseen) ecc = std::max(ecc, d);
  }
  return ecc;
}

}  // namespace

std::size_t degree(const PsiGraph& g, std::size_t v) { return g.neighbors(v).size(); }

std::vector<std::size_t> degree_sequence(const PsiGraph& g) {
  std::vector<std::size_t> seq;
  seq.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) seq.push_back(degree(g, v));
  std::sort(seq.begin(), seq.end());
  return seq;
}

std::int64_t degree_formula_prime_power(unsigned alpha, unsigned beta) {
  if (beta < 1 || beta > alpha) throw std::invalid_argument("degree_formula_prime_power: need 1 <= beta <= alpha");
  const std::uint64_t top = 2ULL * alpha + 1;
  const std::uint64_t base = 2ULL * beta + 1;
  // floor(((top/base) - 1) / 2) == floor((top - base) / (2 * base)) for top >= base.
  const auto odd_multiples = static_cast<std::int64_t>((top - base) / (2 * base));
  return static_cast<std::int64_t>(tau(base)) + odd_multiples - 2;
}

std::int64_t degree_formula_sylow(const Factorization& f, std::size_t i) {
  const auto& parts = f.parts();
  if (parts.size() < 2) throw std::invalid_argument("degree_formula_sylow: need at least two primes");
  if (i >= parts.size()) throw std::out_of_range("degree_formula_sylow: prime index out of range");
  std::int64_t others = 1;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (j != i) others *= parts[j].exponent + 1;
  }
  return others + static_cast<std::int64_t>(tau(2ULL * parts[i].exponent + 1)) - 3;
}

std::vector<std::vector<std::size_t>> connected_components(const PsiGraph& g) {
  std::vector<std::vector<std::size_t>> components;
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const PsiGraph& g) { return g.vertex_count() > 0 && connected_components(g).size() == 1; }

std::optional<std::size_t> diameter(const PsiGraph& g) {
  if (!is_connected(g)) return std::nullopt;
  std::size_t diam = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) diam = std::max(diam, eccentricity(g, v));
  return diam;
}

std::vector<std::size_t> component_diameters(const PsiGraph& g) {
  std::vector<std::size_t> out;
  for (const auto& comp : connected_components(g)) {
    std::size_t diam = 0;
    for (std::size_t v : comp) diam = std::max(diam, eccentricity(g, v));
    out.push_back(diam);
  }
  return out;
}

std::vector<std::size_t> isolated_vertices(const PsiGraph& g) {
  std::vector<std::size_t> out;
  if (g.vertex_count() < 2) return out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbors(v).empty()) out.push_back(v);
  }
  return out;
}

std::size_t isolated_count_prime_power(unsigned n) {
  if (n <= 1) return 0;
  std::size_t count = 0;
  const std::uint64_t top = 2ULL * n + 1;
  for (unsigned alpha = 1; alpha <= n; ++alpha) {
    const std::uint64_t m = 2ULL * alpha + 1;
    if (is_prime(m) && 3 * m > top) ++count;
  }
  return count;
}

TwoColoring two_coloring(const PsiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<std::size_t> parent(n, kUnseen);
  std::vector<std::size_t> depth(n, 0);
  TwoColoring out;

  auto witness = [&](std::size_t u, std::size_t w) {
    std::vector<std::size_t> up{u};
    std::vector<std::size_t> wp{w};
    while (depth[up.back()] > depth[wp.back()]) up.push_back(parent[up.back()]);
    while (depth[wp.back()] > depth[up.back()]) wp.push_back(parent[wp.back()]);
    while (up.back() != wp.back()) {
      up.push_back(parent[up.back()]);
      wp.push_back(parent[wp.back()]);
    }
    std::vector<std::size_t> cycle(up.rbegin(), up.rend());  // lca .. u
    cycle.insert(cycle.end(), wp.begin(), wp.end() - 1);     // w .. child of lca
    return cycle;
  };

  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      for (std::size_t w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          out.colorable = false;
          out.odd_cycle = witness(u, w);
          return out;
        }
      }
    }
  }
  out.colorable = true;
  for (std::size_t v = 0; v < n; ++v) out.parts[static_cast<std::size_t>(color[v])].push_back(v);
  // Edgeless graphs land entirely in part 0; any vertex may move across.
  if (n >= 2 && out.parts[1].empty()) {
    out.parts[1].push_back(out.parts[0].back());
    out.parts[0].pop_back();
  }
  return out;
}

bool is_bipartite(const PsiGraph& g) { return g.vertex_count() >= 2 && two_coloring(g).colorable; }

std::optional<std::size_t> girth(const PsiGraph& g) {
  std::size_t best = kUnseen;
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n);
  std::vector<std::size_t> parent(n);
  for (std::size_t root = 0; root < n && best > 3; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    parent[root] = kUnseen;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      if (best != kUnseen && 2 * dist[u] + 1 >= best) break;
      for (std::size_t w : g.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnseen) return std::nullopt;
  return best;
}

bool is_forest(const PsiGraph& g) { return g.edge_count() + connected_components(g).size() == g.vertex_count(); }

bool is_tree(const PsiGraph& g) { return is_connected(g) && g.edge_count() + 1 == g.vertex_count(); }

bool is_path(const PsiGraph& g) {
  if (!is_tree(g)) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (degree(g, v) > 2) return false;
  }
  return true;
}

bool is_cycle(const PsiGraph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (degree(g, v) != 2) return false;
  }
  return true;
}

bool is_complete(const PsiGraph& g) {
  const std::size_t n = g.vertex_count();
  return n > 0 && g.edge_count() == n * (n - 1) / 2;
}

std::vector<std::size_t> universal_vertices(const PsiGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (degree(g, v) + 1 == g.vertex_count()) out.push_back(v);
  }
  return out;
}

bool has_universal_vertex(const PsiGraph& g) { return !universal_vertices(g).empty(); }

bool euler_nonplanar(const PsiGraph& g) {
  const std::size_t n = g.vertex_count();
  return n >= 3 && g.edge_count() > 3 * n - 6;
}

std::size_t max_clique_size(const PsiGraph& g, std::size_t vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw CapExceeded("max_clique_size: " + std::to_string(g.vertex_count()) + " vertices exceeds cap " +
                      std::to_string(vertex_cap));
  }
  std::size_t best = 0;
  // Candidates are kept in increasing vertex order; each branch only extends
  // with later candidates adjacent to everything chosen so far.
  auto expand = [&](auto& self, std::size_t size, const std::vector<std::size_t>& candidates) -> void {
    if (candidates.empty()) {
      best = std::max(best, size);
      return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (size + (candidates.size() - i) <= best) return;
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (g.adjacent(candidates[i], candidates[j])) next.push_back(candidates[j]);
      }
      self(self, size + 1, next);
    }
  };
  std::vector<std::size_t> all(g.vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
  expand(expand, 0, all);
  return best;
}

Shape shape(const PsiGraph& g) {
  if (is_complete(g)) return Shape::kComplete;
  if (is_cycle(g)) return Shape::kCycle;
  if (is_path(g)) return Shape::kPath;
  if (is_tree(g)) return Shape::kTree;
  return Shape::kOther;
}

std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::kComplete:
      return "complete";
    case Shape::kCycle:
      return "cycle";
    case Shape::kPath:
      return "path";
    case Shape::kTree:
      return "tree";
    case Shape::kOther:
      return "other";
  }
  return "other";
}

bool isomorphic_by_order(const PsiGraph& a, const PsiGraph& b) {
  auto relabel = [](const PsiGraph& g) -> std::optional<std::pair<std::vector<Natural>, std::vector<std::pair<Natural, Natural>>>> {
    std::vector<Natural> orders;
    for (const auto& v : g.vertices()) orders.push_back(v.order);
    std::vector<Natural> sorted = orders;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    std::vector<std::pair<Natural, Natural>> edges;
    for (const auto& e : g.edges()) {
      Natural x = orders[e.u];
      Natural y = orders[e.v];
      if (y < x) std::swap(x, y);
      edges.emplace_back(std::move(x), std::move(y));
    }
    std::sort(edges.begin(), edges.end());
    return std::make_pair(std::move(sorted), std::move(edges));
  };
  auto ra = relabel(a);
  auto rb = relabel(b);
  return ra && rb && *ra == *rb;
}

}  // namespace psigraph
