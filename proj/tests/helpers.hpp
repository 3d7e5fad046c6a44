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


#ifndef EQSYNTH_TESTS_HELPERS_HPP_
#define EQSYNTH_TESTS_HELPERS_HPP_

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqsynth/arena.hpp"
#include "eqsynth/generators.hpp"

namespace eqsynth::testing {

// Arena from (id, owner) pairs and (src, dst) edges; start is the first vertex
// unless given.
inline Arena MakeArena(std::vector<std::string> players,
                       std::vector<std::pair<std::string, std::string>> vertices,
                       std::vector<std::pair<std::string, std::string>> edges,
                       std::string start = "") {
  RawArena raw;
  raw.players = std::move(players);
  for (auto& [id, owner] : vertices) raw.vertices.push_back({id, owner});
  raw.edges = std::move(edges);
  raw.start = start.empty() ? raw.vertices.front().id : start;
  return BuildArena(raw);
}

// Calls fn on every machine of `player` with exactly `states` states.
template <typename Fn>
void ForEachMachine(const Arena& arena, Player player, int states, Fn fn) {
  const int n = arena.NumVertices();
  std::vector<int> radix;
  for (int i = 0; i < n * states; ++i) radix.push_back(states);
  for (Vertex v = 0; v < n; ++v)
    if (arena.Owner(v) == player)
      for (int q = 0; q < states; ++q) radix.push_back(static_cast<int>(arena.Successors(v).size()));
  std::vector<int> digit(radix.size(), 0);
  for (;;) {
    StrategyMachine m(player, n, states);
    size_t d = 0;
    for (Vertex v = 0; v < n; ++v)
      for (int q = 0; q < states; ++q) m.SetUpdate(v, q, digit[d++]);
    for (Vertex v = 0; v < n; ++v) {
      if (arena.Owner(v) != player) continue;
      m.SetControls(v, true);
      for (int q = 0; q < states; ++q) m.SetChoice(v, q, arena.Successors(v)[digit[d++]]);
    }
    fn(m);
    size_t k = 0;
    while (k < digit.size() && ++digit[k] == radix[k]) digit[k++] = 0;
    if (k == digit.size()) return;
  }
}

// (vertex, memory) pairs reachable from (from, 0) when every player moves
// freely and `machine` only tracks memory.
inline std::vector<std::pair<Vertex, int>> FreeStates(const Arena& arena,
                                                       const StrategyMachine& machine,
                                                       Vertex from) {
  std::set<std::pair<Vertex, int>> seen{{from, 0}};
  std::vector<std::pair<Vertex, int>> order{{from, 0}};
  for (size_t i = 0; i < order.size(); ++i) {
    auto [v, q] = order[i];
    int next = machine.Update(v, q);
    for (Vertex w : arena.Successors(v))
      if (seen.insert({w, next}).second) order.push_back({w, next});
  }
  return order;
}

}  // namespace eqsynth::testing

#endif  // EQSYNTH_TESTS_HELPERS_HPP_
