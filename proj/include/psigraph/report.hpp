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

#ifndef PSIGRAPH_REPORT_HPP
#define PSIGRAPH_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "psigraph/analysis.hpp"
#include "psigraph/graph.hpp"

namespace psigraph {

/// Everything the analyzers say about one graph. Vertices are referred to by
/// label; every list is sorted in vertex order.
struct GraphReport {
  std::string n;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> psi_values;
  std::vector<std::size_t> degree_sequence;
  std::vector<std::vector<std::string>> components;
  std::optional<std::size_t> diameter;
  std::vector<std::size_t> component_diameters;
  std::optional<std::size_t> girth;
  bool bipartite = false;
  Shape shape = Shape::kOther;
  std::vector<std::string> universal_vertices;
  std::vector<std::string> isolated;
  bool euler_nonplanar = false;
  std::size_t clique_lower_bound = 0;
};

/// `clique_cap` bounds the exact clique search; larger graphs report the
/// best of a greedy clique and, on the cyclic path, the prime-chain clique.
GraphReport analyze(const PsiGraph& g, std::size_t clique_cap = 64);

/// Keys sorted, integers only; infinite distances are the string "inf".
nlohmann::json to_json(const GraphReport& r);
std::string to_text(const GraphReport& r);

/// Graphviz text: `graph psi_<n> { ... }`, nodes in vertex order, each edge
/// once, sorted by (smaller endpoint, larger endpoint).
std::string to_dot(const PsiGraph& g);

}  // namespace psigraph

#endif  // PSIGRAPH_REPORT_HPP
