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

#include "eqsynth/guarantees.hpp"

#include <algorithm>
#include <set>

namespace eqsynth {

OutcomeMap OutcomeMap::Explicit(std::map<VertexSet, Outcome> table,
                                std::optional<Outcome> fallback) {
  OutcomeMap m;
  m.explicit_ = true;
  for (auto& [set, o] : table) {
    VertexSet sorted = set;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    m.table_[sorted] = o;
  }
  m.fallback_ = fallback;
  return m;
}

OutcomeMap OutcomeMap::Labeled(std::vector<int> label, std::vector<int> priority,
                               std::map<std::pair<int, int>, Outcome> table) {
  OutcomeMap m;
  m.explicit_ = false;
  m.label_ = std::move(label);
  m.priority_ = std::move(priority);
  m.labeled_ = std::move(table);
  return m;
}

std::optional<Outcome> OutcomeMap::Find(const VertexSet& inf) const {
  if (inf.empty()) return std::nullopt;
  if (explicit_) {
    auto it = table_.find(inf);
    if (it != table_.end()) return it->second;
    return fallback_;
  }
  int label = label_[inf.front()];
  int least = priority_[inf.front()];
  for (Vertex v : inf) {
    if (label_[v] != label) return std::nullopt;
    least = std::min(least, priority_[v]);
  }
  auto it = labeled_.find({label, least});
  if (it == labeled_.end()) return std::nullopt;
  return it->second;
}

Outcome OutcomeMap::Of(const VertexSet& inf) const {
  if (auto o = Find(inf)) return *o;
  throw Error(ErrorCode::kInvalidInput, "no outcome for an inf-set");
}

namespace {

// Least priority of the nodes of `comp` and the component pieces that keep
// it: for each priority p, the strongly connected parts of {prio >= p} that
// contain a p-node.
template <typename PriorityOf>
std::vector<std::pair<int, std::vector<int>>> ParityPieces(const graph::Digraph& g,
                                                           const graph::Mask& within,
                                                           PriorityOf priority_of) {
  std::set<int> priorities;
  for (int i = 0; i < g.size(); ++i)
    if (within[i]) priorities.insert(priority_of(i));
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int p : priorities) {
    graph::Mask high(g.size(), 0);
    for (int i = 0; i < g.size(); ++i) high[i] = within[i] && priority_of(i) >= p;
    for (auto& comp : graph::NontrivialComponents(g, high)) {
      bool has_p = false;
      for (int node : comp) has_p = has_p || priority_of(node) == p;
      if (has_p) out.emplace_back(p, std::move(comp));
    }
  }
  return out;
}

}  // namespace

void ValidateGraphGame(const GraphGame& game) {
  const Arena& arena = game.arena;
  const auto& prefs = game.prefs;
  if (prefs.NumPlayers() != arena.NumPlayers())
    throw Error(ErrorCode::kInvalidInput, "preferences must be given for every player");
  for (Player p = 0; p < prefs.NumPlayers(); ++p) {
    if (prefs.players.size() == prefs.orders.size() && prefs.players[p] != arena.PlayerName(p))
      throw Error(ErrorCode::kInvalidInput, "preference players do not match the arena");
    if (prefs.orders[p].NumOutcomes() != prefs.NumOutcomes())
      throw Error(ErrorCode::kInvalidInput, "preferences must rank every outcome");
  }
  if (prefs.NumOutcomes() == 0) throw Error(ErrorCode::kInvalidInput, "no outcomes");
  auto check_outcome = [&](Outcome o) {
    if (o < 0 || o >= prefs.NumOutcomes())
      throw Error(ErrorCode::kInvalidInput, "outcome index out of range");
  };
  const OutcomeMap& map = game.outcomes;
  if (map.IsExplicit()) {
    for (const auto& [set, o] : map.table()) check_outcome(o);
    if (map.fallback()) check_outcome(*map.fallback());
    for (const auto& set : AllFeasibleInfSets(arena)) {
      if (!map.Find(set)) {
        std::string names;
        for (Vertex v : set) names += (names.empty() ? "" : ",") + arena.Id(v);
        throw Error(ErrorCode::kInvalidInput, "no outcome for inf-set {" + names + "}");
      }
    }
    return;
  }
  const int n = arena.NumVertices();
  if (static_cast<int>(map.label().size()) != n || static_cast<int>(map.priority().size()) != n)
    throw Error(ErrorCode::kInvalidInput, "labels and priorities must cover every vertex");
  for (const auto& [key, o] : map.labeled_table()) check_outcome(o);
  for (const auto& comp : graph::NontrivialComponents(arena.Graph())) {
    for (Vertex v : comp)
      if (map.label()[v] != map.label()[comp.front()])
        throw Error(ErrorCode::kInvalidInput, "label varies inside a strongly connected part");
  }
  graph::Mask all(n, 1);
  for (const auto& [p, comp] :
       ParityPieces(arena.Graph(), all, [&](int v) { return map.priority()[v]; })) {
    if (!map.labeled_table().count({map.label()[comp.front()], p}))
      throw Error(ErrorCode::kInvalidInput, "no outcome for a reachable (label, priority)");
  }
}

std::vector<ProductPlay> ProductPlays(const GraphGame& game, const ProductGraph& product) {
  const OutcomeMap& map = game.outcomes;
  int from[] = {product.start};
  graph::Mask reach = graph::Reachable(product.graph, from);
  std::map<Outcome, std::vector<int>> found;
  if (map.IsExplicit()) {
    for (const auto& target : FeasibleInfSets(game.arena, product.projection[product.start])) {
      Outcome o = map.Of(target);
      if (found.count(o)) continue;
      if (auto nodes = FindCycleWithProjection(product, target, reach)) found[o] = *nodes;
    }
  } else {
    for (auto& [p, comp] : ParityPieces(product.graph, reach, [&](int node) {
           return map.priority()[product.projection[node]];
         })) {
      int label = map.label()[product.projection[comp.front()]];
      auto it = map.labeled_table().find({label, p});
      if (it == map.labeled_table().end())
        throw Error(ErrorCode::kInvalidInput, "no outcome for a reachable (label, priority)");
      found.emplace(it->second, std::move(comp));
    }
  }
  std::vector<ProductPlay> out;
  for (auto& [o, nodes] : found) out.push_back({o, std::move(nodes)});
  return out;
}

std::vector<Outcome> RealizableOutcomes(const GraphGame& game, Vertex from) {
  ProductGraph product = FixMachines(game.arena, {}, from);
  std::vector<Outcome> out;
  for (const auto& play : ProductPlays(game, product)) out.push_back(play.outcome);
  return out;
}

WinLoseGame ThresholdGameAtRank(const GraphGame& game, Player a, int rank) {
  const StrictWeakOrder& order = game.Order(a);
  const OutcomeMap& map = game.outcomes;
  if (map.IsExplicit()) {
    Muller muller;
    for (const auto& set : AllFeasibleInfSets(game.arena))
      if (order.Rank(map.Of(set)) > rank) muller.family.push_back(set);
    return WinLoseGame::ForPlayer(game.arena, a, std::move(muller));
  }
  std::vector<int> distinct = map.priority();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Parity parity;
  for (Vertex v = 0; v < game.arena.NumVertices(); ++v) {
    int p = map.priority()[v];
    int idx = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), p) -
                               distinct.begin());
    auto it = map.labeled_table().find({map.label()[v], p});
    bool good = it != map.labeled_table().end() && order.Rank(it->second) > rank;
    parity.priority.push_back(2 * idx + (good ? 0 : 1));
  }
  return WinLoseGame::ForPlayer(game.arena, a, std::move(parity));
}

WinLoseGame ThresholdGame(const GraphGame& game, Player a, Outcome o) {
  return ThresholdGameAtRank(game, a, game.Order(a).Rank(o));
}

PlayerGuarantee BestGuarantee(const GraphGame& game, Player a) {
  const int n = game.arena.NumVertices();
  const int classes = game.Order(a).NumClasses();
  PlayerGuarantee g;
  g.value.assign(n, 0);
  for (int j = 0; j + 1 < classes; ++j) {
    g.threshold.push_back(Solve(ThresholdGameAtRank(game, a, j)));
    const SolveResult& r = g.threshold.back();
    g.memory_bits = std::max(g.memory_bits, r.memory_bits_used);
    for (Vertex v : r.win0) g.value[v] = j + 1;
  }
  return g;
}

GuaranteeTable ComputeGuarantees(const GraphGame& game) {
  GuaranteeTable table;
  table.n = game.arena.NumVertices();
  for (Player a = 0; a < game.arena.NumPlayers(); ++a) {
    table.players.push_back(BestGuarantee(game, a));
    table.m = std::max(table.m, table.players.back().memory_bits);
  }
  return table;
}

Outcome GuaranteeTable::Representative(const GraphGame& game, Player a, Vertex v) const {
  return game.Order(a).Class(players[a].value[v]).front();
}

OptimalStrategy BuildOptimalStrategy(const GraphGame& game, Player a, const PlayerGuarantee& g) {
  const Arena& arena = game.arena;
  const int n = arena.NumVertices();
  std::vector<int> need(n);
  for (Vertex v = 0; v < n; ++v) need[v] = g.value[v] - 1;
  const int start_machine = *std::min_element(need.begin(), need.end());

  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> states;
  auto intern = [&](std::pair<int, int> s) {
    auto [it, inserted] = index.emplace(s, static_cast<int>(states.size()));
    if (inserted) states.push_back(s);
    return it->second;
  };
  intern({start_machine, 0});
  // (active, state) after reading v: switch when v needs another machine.
  auto enter = [&](std::pair<int, int> s, Vertex v) {
    if (need[v] != s.first) s = {need[v], 0};
    return s;
  };
  std::vector<std::vector<int>> update;
  for (size_t i = 0; i < states.size(); ++i) {
    std::vector<int> row(n);
    for (Vertex v = 0; v < n; ++v) {
      auto [j, q] = enter(states[i], v);
      int next = j < 0 ? 0 : g.threshold[j].strategy0.Update(v, q);
      row[v] = intern({j, next});
    }
    update.push_back(std::move(row));
  }
  OptimalStrategy out;
  out.machine = StrategyMachine(a, n, static_cast<int>(states.size()));
  for (size_t i = 0; i < states.size(); ++i) {
    out.active.push_back(states[i].first);
    for (Vertex v = 0; v < n; ++v) {
      out.machine.SetUpdate(v, static_cast<int>(i), update[i][v]);
      if (arena.Owner(v) != a) continue;
      out.machine.SetControls(v, true);
      auto [j, q] = enter(states[i], v);
      Vertex to = j < 0 ? arena.Successors(v)[0] : g.threshold[j].strategy0.Choice(v, q);
      out.machine.SetChoice(v, static_cast<int>(i), to);
    }
  }
  return out;
}

OptimalStrategy BuildOptimalStrategy(const GraphGame& game, Player a) {
  return BuildOptimalStrategy(game, a, BestGuarantee(game, a));
}

Punishment PunishmentStrategy(const GraphGame& game, Player b, Vertex v,
                              const PlayerGuarantee& g) {
  const Arena& arena = game.arena;
  Punishment out;
  out.rank = g.value[v];
  if (out.rank + 1 >= game.Order(b).NumClasses()) {
    std::vector<Vertex> choice(arena.NumVertices(), -1);
    for (Vertex u = 0; u < arena.NumVertices(); ++u)
      if (arena.Owner(u) != b) choice[u] = arena.Successors(u)[0];
    out.machine = StrategyMachine::Positional(-1, choice);
  } else {
    out.machine = g.threshold[out.rank].strategy1;
    out.machine.set_player(-1);
  }
  return out;
}

Punishment PunishmentStrategy(const GraphGame& game, Player b, Vertex v) {
  return PunishmentStrategy(game, b, v, BestGuarantee(game, b));
}

int WorstRankAgainst(const GraphGame& game, Player a, const StrategyMachine& machine,
                     Vertex from) {
  const StrategyMachine fixed[] = {machine};
  ProductGraph product = FixMachines(game.arena, fixed, from);
  int worst = game.Order(a).NumClasses();
  for (const auto& play : ProductPlays(game, product))
    worst = std::min(worst, game.Order(a).Rank(play.outcome));
  return worst;
}

EnergyGame MakeEnergyGame(const Arena& arena, const EnergySpec& spec, int max_nodes) {
  EnergyGame out{BuildEnergyProduct(arena, spec, max_nodes), {}, spec};
  const EnergyProduct& product = out.product;
  const Arena& parena = product.arena;
  const int players = arena.NumPlayers();
  if (static_cast<int>(spec.wants_even.size()) != players)
    throw Error(ErrorCode::kInvalidInput, "parity goal missing for some player");

  std::map<std::vector<long long>, int> label_of;
  std::vector<std::vector<long long>> label_vectors;
  std::vector<int> label(parena.NumVertices());
  for (Vertex node = 0; node < parena.NumVertices(); ++node) {
    auto [it, inserted] =
        label_of.emplace(product.minimum[node], static_cast<int>(label_vectors.size()));
    if (inserted) label_vectors.push_back(product.minimum[node]);
    label[node] = it->second;
  }
  std::set<std::pair<int, int>> pairs;
  graph::Mask all(parena.NumVertices(), 1);
  for (const auto& [p, comp] :
       ParityPieces(parena.Graph(), all, [&](int node) { return product.priority[node]; }))
    pairs.insert({label[comp.front()], p});

  std::map<std::pair<int, int>, Outcome> table;
  PreferenceProfile prefs;
  prefs.players = arena.Players();
  std::vector<std::vector<int>> ranks(players);
  for (const auto& [l, p] : pairs) {
    table[{l, p}] = static_cast<Outcome>(prefs.outcomes.size());
    std::string name = "p=" + std::to_string(p) + "|m=";
    for (int a = 0; a < players; ++a) {
      long long m = label_vectors[l][a];
      name += (a ? "," : "") + std::to_string(m);
      bool good = (p % 2 == 0) == spec.wants_even[a];
      ranks[a].push_back(static_cast<int>(2 * (m - spec.caps[a].first)) + (good ? 1 : 0));
    }
    prefs.outcomes.push_back(name);
  }
  for (int a = 0; a < players; ++a) prefs.orders.emplace_back(ranks[a]);
  out.game = GraphGame{parena, OutcomeMap::Labeled(label, product.priority, std::move(table)),
                       std::move(prefs)};
  return out;
}

}  // namespace eqsynth
