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

#include "psigraph/report.hpp"

#include <algorithm>
#include <sstream>

namespace psigraph {

namespace {

std::size_t greedy_clique(const PsiGraph& g) {
  std::vector<std::size_t> order(g.vertex_count());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&g](std::size_t a, std::size_t b) { return degree(g, a) > degree(g, b); });
  std::vector<std::size_t> clique;
  for (std::size_t v : order) {
    if (std::all_of(clique.begin(), clique.end(), [&](std::size_t c) { return g.adjacent(c, v); })) {
      clique.push_back(v);
    }
  }
  return clique.size();
}

nlohmann::json distance_json(const std::optional<std::size_t>& d) {
  if (d) return *d;
  return "inf";
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& item : items) {
    if (!s.empty()) s += ' ';
    s += item;
  }
  return s;
}

}  // namespace

GraphReport analyze(const PsiGraph& g, std::size_t clique_cap) {
  GraphReport r;
  auto label = [&g](std::size_t v) { return g.vertex(v).label; };
  auto labels = [&](const std::vector<std::size_t>& vs) {
    std::vector<std::string> out;
    for (std::size_t v : vs) out.push_back(label(v));
    return out;
  };

  r.n = g.cyclic_order() ? g.cyclic_order()->value().to_string() : g.name().substr(4);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    r.vertices.push_back(label(v));
    r.psi_values.emplace_back(label(v), g.vertex(v).psi.to_string());
  }
  for (const auto& e : g.edges()) r.edges.emplace_back(label(e.u), label(e.v));
  r.degree_sequence = degree_sequence(g);
  for (const auto& comp : connected_components(g)) r.components.push_back(labels(comp));
  r.diameter = diameter(g);
  r.component_diameters = component_diameters(g);
  r.girth = girth(g);
  r.bipartite = is_bipartite(g);
  r.shape = shape(g);
  r.universal_vertices = labels(universal_vertices(g));
  r.isolated = labels(isolated_vertices(g));
  r.euler_nonplanar = euler_nonplanar(g);
  if (g.vertex_count() <= clique_cap) {
    r.clique_lower_bound = max_clique_size(g, clique_cap);
  } else {
    r.clique_lower_bound = greedy_clique(g);
    if (g.cyclic_order()) r.clique_lower_bound = std::max(r.clique_lower_bound, g.cyclic_order()->prime_count());
  }
  return r;
}

nlohmann::json to_json(const GraphReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["vertices"] = r.vertices;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : r.edges) j["edges"].push_back({a, b});
  j["psi_values"] = nlohmann::json::array();
  for (const auto& [v, psi] : r.psi_values) j["psi_values"].push_back({v, psi});
  j["degree_sequence"] = r.degree_sequence;
  j["components"] = r.components;
  j["diameter"] = distance_json(r.diameter);
  j["component_diameters"] = r.component_diameters;
  j["girth"] = distance_json(r.girth);
  j["bipartite"] = r.bipartite;
  j["shape"] = std::string(shape_name(r.shape));
  j["universal_vertex"] = r.universal_vertices;
  j["isolated"] = r.isolated;
  j["euler_nonplanar"] = r.euler_nonplanar;
  j["clique_lower_bound"] = r.clique_lower_bound;
  return j;
}

std::string to_text(const GraphReport& r) {
  auto dist = [](const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : std::string("inf"); };
  std::ostringstream os;
  os << "n: " << r.n << '\n';
  os << "vertices: " << r.vertices.size() << '\n';
  os << "edges: " << r.edges.size() << '\n';
  os << "components: " << r.components.size() << '\n';
  os << "diameter: " << dist(r.diameter) << '\n';
  os << "girth: " << dist(r.girth) << '\n';
  os << "bipartite: " << (r.bipartite ? "yes" : "no") << '\n';
  os << "shape: " << shape_name(r.shape) << '\n';
  os << "universal vertices: " << join(r.universal_vertices) << '\n';
  os << "isolated: " << join(r.isolated) << '\n';
  os << "euler nonplanar: " << (r.euler_nonplanar ? "yes" : "no") << '\n';
  os << "clique lower bound: " << r.clique_lower_bound << '\n';
  return os.str();
}

std::string to_dot(const PsiGraph& g) {
  std::ostringstream os;
  os << "graph " << g.name() << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Vertex& vx = g.vertex(v);
    os << "  v" << v << " [label=\"";
    if (g.cyclic_order()) {
      os << vx.label;
    } else {
      os << vx.order << " #" << vx.subgroup_index;
    }
    os << "\"];\n";
  }
  for (const auto& e : g.edges()) os << "  v" << e.u << " -- v" << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace psigraph
