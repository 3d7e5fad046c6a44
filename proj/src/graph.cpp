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

#include "eqsynth/graph.hpp"

#include <algorithm>
#include <deque>

namespace eqsynth::graph {

namespace {

bool In(const Mask& within, int v) { return within.empty() || within[v]; }

}  // namespace

Mask Reachable(const Digraph& g, std::span<const int> sources, const Mask& within) {
  Mask seen(g.size(), 0);
  std::vector<int> stack;
  for (int s : sources) {
    if (In(within, s) && !seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.succ[v]) {
      if (!seen[w] && In(within, w)) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

Mask CanReach(const Digraph& g, const Mask& targets, const Mask& within) {
  std::vector<std::vector<int>> pred(g.size());
  for (int v = 0; v < g.size(); ++v)
    for (int w : g.succ[v]) pred[w].push_back(v);
  Mask seen(g.size(), 0);
  std::vector<int> stack;
  for (int v = 0; v < g.size(); ++v) {
    if (targets[v] && In(within, v)) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : pred[v]) {
      if (!seen[u] && In(within, u)) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

Components StronglyConnected(const Digraph& g, const Mask& within) {
  const int n = g.size();
  Components out;
  out.id.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  // Explicit call stack of (node, next successor position).
  std::vector<std::pair<int, size_t>> calls;
  int counter = 0;

  for (int root = 0; root < n; ++root) {
    if (!In(within, root) || index[root] != -1) continue;
    calls.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!calls.empty()) {
      auto& [v, pos] = calls.back();
      if (pos < g.succ[v].size()) {
        int w = g.succ[v][pos++];
        if (!In(within, w)) continue;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          calls.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      int done = v;
      calls.pop_back();
      if (!calls.empty()) {
        int parent = calls.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          out.id[w] = out.count;
        } while (w != done);
        ++out.count;
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> NontrivialComponents(const Digraph& g, const Mask& within) {
  Components comps = StronglyConnected(g, within);
  std::vector<std::vector<int>> members(comps.count);
  std::vector<char> has_edge(comps.count, 0);
  for (int v = 0; v < g.size(); ++v) {
    int c = comps.id[v];
    if (c < 0) continue;
    members[c].push_back(v);
    for (int w : g.succ[v])
      if (comps.id[w] == c) has_edge[c] = 1;
  }
  std::vector<std::vector<int>> out;
  for (int c = 0; c < comps.count; ++c)
    if (has_edge[c]) out.push_back(std::move(members[c]));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> ShortestPath(const Digraph& g, int from, const Mask& goal,
                                             const Mask& within) {
  if (!In(within, from)) return std::nullopt;
  std::vector<int> parent(g.size(), -2);
  std::deque<int> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (goal[v]) {
      std::vector<int> path;
      for (int x = v; x != -1; x = parent[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int w : g.succ[v]) {
      if (parent[w] == -2 && In(within, w)) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

std::vector<int> CoveringCycle(const Digraph& g, const std::vector<int>& nodes) {
  Mask within(g.size(), 0);
  for (int v : nodes) within[v] = 1;
  Mask pending = within;
  std::vector<int> walk{nodes.front()};
  pending[nodes.front()] = 0;
  int current = nodes.front();
  // Appends a shortest path of at least one step from current into goal.
  auto extend = [&](const Mask& goal) {
    std::optional<std::vector<int>> best;
    for (int w : g.succ[current]) {
      if (!within[w]) continue;
      if (goal[w]) {
        best = std::vector<int>{current, w};
        break;
      }
      auto rest = ShortestPath(g, w, goal, within);
      if (rest && (!best || rest->size() + 1 < best->size())) {
        std::vector<int> path{current};
        path.insert(path.end(), rest->begin(), rest->end());
        best = std::move(path);
      }
    }
    for (size_t i = 1; i < best->size(); ++i) {
      walk.push_back((*best)[i]);
      pending[(*best)[i]] = 0;
    }
    current = walk.back();
  };
  for (;;) {
    bool any = false;
    for (int v : nodes)
      if (pending[v]) any = true;
    if (!any) break;
    extend(pending);
  }
  // Close the walk back to the first node with at least one step.
  Mask home(g.size(), 0);
  home[nodes.front()] = 1;
  extend(home);
  walk.pop_back();
  return walk;
}

}  // namespace eqsynth::graph
