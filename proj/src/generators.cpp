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

#include "eqsynth/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace eqsynth::gen {

int Uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Arena RandomArena(Rng& rng, int n, int players, double density) {
  RawArena raw;
  for (int p = 0; p < players; ++p) raw.players.push_back(std::string(1, static_cast<char>('A' + p)));
  std::bernoulli_distribution edge(density);
  for (int v = 0; v < n; ++v)
    raw.vertices.push_back({"v" + std::to_string(v), raw.players[Uniform(rng, 0, players - 1)]});
  for (int v = 0; v < n; ++v) {
    bool any = false;
    for (int w = 0; w < n; ++w) {
      if (edge(rng)) {
        raw.edges.emplace_back(raw.vertices[v].id, raw.vertices[w].id);
        any = true;
      }
    }
    if (!any) raw.edges.emplace_back(raw.vertices[v].id, raw.vertices[Uniform(rng, 0, n - 1)].id);
  }
  raw.start = raw.vertices.front().id;
  return BuildArena(raw);
}

StrategyMachine RandomMachine(Rng& rng, const Arena& arena, Player player, int states) {
  StrategyMachine m(player, arena.NumVertices(), states);
  for (Vertex v = 0; v < arena.NumVertices(); ++v) {
    bool own = arena.Owner(v) == player;
    m.SetControls(v, own);
    const auto& succ = arena.Successors(v);
    for (int q = 0; q < states; ++q) {
      m.SetUpdate(v, q, Uniform(rng, 0, states - 1));
      if (own) m.SetChoice(v, q, succ[Uniform(rng, 0, static_cast<int>(succ.size()) - 1)]);
    }
  }
  return m;
}

StrictWeakOrder RandomOrder(Rng& rng, int outcomes) {
  std::vector<int> ranks(outcomes);
  for (int& r : ranks) r = Uniform(rng, 0, outcomes - 1);
  return StrictWeakOrder(ranks);
}

StrictWeakOrder RandomLinearOrder(Rng& rng, int outcomes) {
  std::vector<int> ranks(outcomes);
  std::iota(ranks.begin(), ranks.end(), 0);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  return StrictWeakOrder(ranks);
}

WinLoseGame RandomParityGame(Rng& rng, int max_vertices, int priorities) {
  int n = Uniform(rng, 1, max_vertices);
  Arena a = RandomArena(rng, n, 2);
  Parity parity;
  for (int v = 0; v < n; ++v) parity.priority.push_back(Uniform(rng, 0, priorities - 1));
  return WinLoseGame::ForPlayer(a, 0, std::move(parity));
}

WinLoseGame RandomMullerGame(Rng& rng, int max_vertices) {
  int n = Uniform(rng, 1, max_vertices);
  Arena a = RandomArena(rng, n, 2);
  Muller muller;
  for (unsigned s = 1; s < (1u << n); ++s) {
    if (Uniform(rng, 0, 1)) continue;
    VertexSet set;
    for (Vertex v = 0; v < n; ++v)
      if (s >> v & 1) set.push_back(v);
    muller.family.push_back(set);
  }
  return WinLoseGame::ForPlayer(a, 0, std::move(muller));
}

GraphGame RandomGraphGame(Rng& rng, const GameShape& shape) {
  int n = Uniform(rng, 1, shape.max_vertices);
  int players = Uniform(rng, shape.min_players, shape.max_players);
  int outcomes = Uniform(rng, 1, shape.max_outcomes);
  Arena a = RandomArena(rng, n, players);
  std::map<VertexSet, Outcome> table;
  for (const auto& set : AllFeasibleInfSets(a)) table[set] = Uniform(rng, 0, outcomes - 1);
  PreferenceProfile prefs;
  prefs.players = a.Players();
  for (int o = 0; o < outcomes; ++o) prefs.outcomes.push_back("o" + std::to_string(o));
  for (int p = 0; p < players; ++p)
    prefs.orders.push_back(shape.linear ? RandomLinearOrder(rng, outcomes)
                                        : RandomOrder(rng, outcomes));
  return GraphGame{a, OutcomeMap::Explicit(std::move(table)), std::move(prefs)};
}

EnergySpec RandomEnergySpec(Rng& rng, const Arena& arena, int max_weight, int max_cap) {
  EnergySpec spec;
  for (Player p = 0; p < arena.NumPlayers(); ++p) {
    std::vector<long long> w;
    for (Vertex v = 0; v < arena.NumVertices(); ++v) w.push_back(Uniform(rng, -max_weight, max_weight));
    spec.weight.push_back(std::move(w));
    spec.caps.push_back({-Uniform(rng, 0, max_cap), Uniform(rng, 0, max_cap)});
    spec.wants_even.push_back(Uniform(rng, 0, 1) == 1);
  }
  for (Vertex v = 0; v < arena.NumVertices(); ++v) spec.priority.push_back(Uniform(rng, 0, 2));
  return spec;
}

namespace {

void GrowTree(Rng& rng, TreeGame& t, int depth, int max_depth, int max_children,
              const std::function<void(TreeNode&)>& fill_leaf) {
  const int n = t.NumNodes();
  t.nodes.emplace_back();
  if (depth == max_depth || (depth > 0 && Uniform(rng, 0, 2) == 0)) {
    fill_leaf(t.nodes[n]);
    return;
  }
  t.nodes[n].owner = Uniform(rng, 0, t.NumPlayers() - 1);
  const int children = Uniform(rng, 1, max_children);
  for (int c = 0; c < children; ++c) {
    t.nodes[n].children.push_back(t.NumNodes());
    GrowTree(rng, t, depth + 1, max_depth, max_children, fill_leaf);
  }
}

}  // namespace

TreeGame RandomPayoffTree(Rng& rng, int max_depth, int players, int max_children,
                          int denominator) {
  TreeGame t;
  for (int a = 0; a < players; ++a) t.players.push_back(std::string(1, static_cast<char>('A' + a)));
  GrowTree(rng, t, 0, max_depth, max_children, [&](TreeNode& leaf) {
    for (int a = 0; a < players; ++a)
      leaf.payoffs.emplace_back(Uniform(rng, 0, denominator), denominator);
  });
  return t;
}

TreeGame RandomOutcomeTree(Rng& rng, int max_depth, int players, int outcomes,
                           int max_children) {
  TreeGame t;
  for (int a = 0; a < players; ++a) {
    t.players.push_back(std::string(1, static_cast<char>('A' + a)));
    t.prefs.push_back(Relation::FromOrder(RandomOrder(rng, outcomes)));
  }
  for (int o = 0; o < outcomes; ++o) t.outcomes.push_back("o" + std::to_string(o));
  GrowTree(rng, t, 0, max_depth, max_children,
           [&](TreeNode& leaf) { leaf.outcome = Uniform(rng, 0, outcomes - 1); });
  return t;
}

}  // namespace eqsynth::gen
