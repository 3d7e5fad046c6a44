// Copyright 2026 The eqsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EQSYNTH_GRAPH_HPP_
#define EQSYNTH_GRAPH_HPP_

#include <optional>
#include <span>
#include <vector>

namespace eqsynth::graph {

// Plain adjacency-list digraph on nodes 0..n-1. Node masks use char so that
// they can be passed around by value cheaply and indexed without proxies.
struct Digraph {
  std::vector<std::vector<int>> succ;

  int size() const { return static_cast<int>(succ.size()); }
};

using Mask = std::vector<char>;

// Forward closure of `sources` inside `within` (all nodes when empty).
Mask Reachable(const Digraph& g, std::span<const int> sources, const Mask& within = {});

// Nodes of `within` that can reach `targets` using only nodes of `within`.
Mask CanReach(const Digraph& g, const Mask& targets, const Mask& within = {});

// Strongly connected components of the subgraph induced by `within`.
// Returns a component id per node (-1 outside `within`) and the count.
struct Components {
  std::vector<int> id;
  int count = 0;
};
Components StronglyConnected(const Digraph& g, const Mask& within = {});

// Components that carry at least one internal edge (so a play can stay in
// them forever), as node lists in increasing order.
std::vector<std::vector<int>> NontrivialComponents(const Digraph& g, const Mask& within = {});

// Shortest path from `from` to any node with goal[node] set, moving only
// through `within`. Includes both endpoints.
std::optional<std::vector<int>> ShortestPath(const Digraph& g, int from, const Mask& goal,
                                             const Mask& within = {});

// A closed walk starting at nodes.front() that visits every node of the
// strongly connected set `nodes`, never leaving it. The returned sequence
// does not repeat the first node at the end.
std::vector<int> CoveringCycle(const Digraph& g, const std::vector<int>& nodes);

}  // namespace eqsynth::graph

#endif  // EQSYNTH_GRAPH_HPP_
