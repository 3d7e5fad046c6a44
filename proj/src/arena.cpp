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

#include "eqsynth/arena.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace eqsynth {

bool Arena::HasEdge(Vertex u, Vertex v) const {
  const auto& s = graph_.succ[u];
  return std::find(s.begin(), s.end(), v) != s.end();
}

std::optional<Vertex> Arena::Find(const std::string& id) const {
  for (Vertex v = 0; v < NumVertices(); ++v)
    if (ids_[v] == id) return v;
  return std::nullopt;
}

Vertex Arena::IndexOf(const std::string& id) const {
  if (auto v = Find(id)) return *v;
  throw Error(ErrorCode::kInvalidInput, "unknown vertex '" + id + "'");
}

std::optional<Player> Arena::FindPlayer(const std::string& name) const {
  for (Player p = 0; p < NumPlayers(); ++p)
    if (players_[p] == name) return p;
  return std::nullopt;
}

Arena Arena::WithStart(Vertex v) const {
  Arena copy = *this;
  copy.start_ = v;
  return copy;
}

RawArena Arena::ToRaw() const {
  RawArena raw;
  raw.players = players_;
  for (Vertex v = 0; v < NumVertices(); ++v) {
    raw.vertices.push_back({ids_[v], players_[owner_[v]]});
    for (Vertex w : graph_.succ[v]) raw.edges.emplace_back(ids_[v], ids_[w]);
  }
  raw.start = ids_[start_];
  return raw;
}

ArenaCheck ValidateArena(const RawArena& raw) {
  ArenaCheck check;
  auto& issues = check.issues;

  std::map<std::string, Player> player_index;
  for (const auto& name : raw.players) {
    if (!player_index.emplace(name, static_cast<Player>(player_index.size())).second)
      issues.push_back({ErrorCode::kDuplicateId, "player '" + name + "' declared twice"});
  }
  std::map<std::string, Vertex> vertex_index;
  std::vector<Player> owner;
  for (const auto& rv : raw.vertices) {
    if (!vertex_index.emplace(rv.id, static_cast<Vertex>(owner.size())).second) {
      issues.push_back({ErrorCode::kDuplicateId, "vertex '" + rv.id + "' declared twice"});
      continue;
    }
    auto it = player_index.find(rv.owner);
    if (it == player_index.end()) {
      issues.push_back({ErrorCode::kUnknownOwner,
                        "vertex '" + rv.id + "' owned by unknown player '" + rv.owner + "'"});
      owner.push_back(-1);
    } else {
      owner.push_back(it->second);
    }
  }
  const int n = static_cast<int>(owner.size());
  std::vector<std::set<Vertex>> succ(n);
  for (const auto& [from, to] : raw.edges) {
    auto f = vertex_index.find(from);
    auto t = vertex_index.find(to);
    if (f == vertex_index.end() || t == vertex_index.end()) {
      issues.push_back({ErrorCode::kDanglingEdge,
                        "edge (" + from + "," + to + ") uses an undeclared vertex"});
      continue;
    }
    succ[f->second].insert(t->second);
  }
  auto start = vertex_index.find(raw.start);
  if (start == vertex_index.end())
    issues.push_back({ErrorCode::kMissingStart, "start vertex '" + raw.start + "' not declared"});
  std::vector<std::string> ids(n);
  for (const auto& [id, v] : vertex_index) ids[v] = id;
  for (Vertex v = 0; v < n; ++v)
    if (succ[v].empty())
      issues.push_back({ErrorCode::kDeadEndVertex, "vertex '" + ids[v] + "' has no successor"});
  if (!issues.empty()) return check;

  Arena arena;
  arena.players_ = raw.players;
  arena.ids_ = std::move(ids);
  arena.owner_ = std::move(owner);
  arena.graph_.succ.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& out = arena.graph_.succ[v];
    out.assign(succ[v].begin(), succ[v].end());
    std::sort(out.begin(), out.end(),
              [&](Vertex a, Vertex b) { return arena.ids_[a] < arena.ids_[b]; });
  }
  arena.start_ = start->second;
  check.arena = std::move(arena);
  return check;
}

Arena BuildArena(const RawArena& raw) {
  ArenaCheck check = ValidateArena(raw);
  if (check.arena) return std::move(*check.arena);
  std::string message;
  for (const auto& issue : check.issues) {
    if (!message.empty()) message += "; ";
    message += std::string(ErrorCodeName(issue.code)) + ": " + issue.detail;
  }
  throw Error(check.issues.front().code, message);
}

std::string ToDot(const Arena& arena) {
  std::ostringstream out;
  out << "digraph arena {\n";
  for (Vertex v = 0; v < arena.NumVertices(); ++v)
    out << "  \"" << arena.Id(v) << "\" [label=\"" << arena.Id(v) << "|"
        << arena.PlayerName(arena.Owner(v)) << "\"];\n";
  for (Vertex v = 0; v < arena.NumVertices(); ++v)
    for (Vertex w : arena.Successors(v))
      out << "  \"" << arena.Id(v) << "\" -> \"" << arena.Id(w) << "\";\n";
  out << "}\n";
  return out.str();
}

bool IsValidLasso(const Arena& arena, const Lasso& lasso, Vertex from) {
  if (lasso.cycle.empty()) return false;
  std::vector<Vertex> seq = lasso.stem;
  seq.insert(seq.end(), lasso.cycle.begin(), lasso.cycle.end());
  for (Vertex v : seq)
    if (v < 0 || v >= arena.NumVertices()) return false;
  if (seq.front() != from) return false;
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (!arena.HasEdge(seq[i], seq[i + 1])) return false;
  return arena.HasEdge(lasso.cycle.back(), lasso.cycle.front());
}

VertexSet InfSet(const Lasso& lasso) {
  VertexSet set(lasso.cycle.begin(), lasso.cycle.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

Lasso NormalizeLasso(Lasso lasso) {
  auto& cycle = lasso.cycle;
  const size_t len = cycle.size();
  for (size_t period = 1; period < len; ++period) {
    if (len % period != 0) continue;
    bool repeats = true;
    for (size_t i = period; i < len && repeats; ++i) repeats = cycle[i] == cycle[i - period];
    if (repeats) {
      cycle.resize(period);
      break;
    }
  }
  while (!lasso.stem.empty() && lasso.stem.back() == cycle.back()) {
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
    lasso.stem.pop_back();
  }
  return lasso;
}

namespace {

using Bits = std::uint32_t;

// Strongly connected with an internal successor for every member.
bool IsCycleSet(const std::vector<Bits>& succ_bits, Bits set) {
  if (set == 0) return false;
  for (Bits rest = set; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    if ((succ_bits[v] & set) == 0) return false;
  }
  int first = std::countr_zero(set);
  // Forward closure inside set.
  Bits seen = Bits{1} << first, frontier = seen;
  while (frontier) {
    Bits next = 0;
    for (Bits f = frontier; f; f &= f - 1) next |= succ_bits[std::countr_zero(f)] & set;
    frontier = next & ~seen;
    seen |= next;
  }
  if (seen != set) return false;
  // Every member reaches first.
  Bits back = Bits{1} << first;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Bits rest = set & ~back; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (succ_bits[v] & back) {
        back |= Bits{1} << v;
        grew = true;
      }
    }
  }
  return back == set;
}

std::vector<Bits> SuccessorBits(const Arena& arena) {
  std::vector<Bits> bits(arena.NumVertices(), 0);
  for (Vertex v = 0; v < arena.NumVertices(); ++v)
    for (Vertex w : arena.Successors(v)) bits[v] |= Bits{1} << w;
  return bits;
}

VertexSet ToSet(Bits bits) {
  VertexSet set;
  for (; bits; bits &= bits - 1) set.push_back(std::countr_zero(bits));
  return set;
}

std::vector<VertexSet> CycleSetsWithin(const Arena& arena, Bits allowed) {
  auto succ = SuccessorBits(arena);
  std::vector<VertexSet> out;
  // Enumerate non-empty submasks of `allowed`.
  for (Bits s = allowed; s; s = (s - 1) & allowed)
    if (IsCycleSet(succ, s)) out.push_back(ToSet(s));
  std::sort(out.begin(), out.end());
  return out;
}

void CheckFeasibleBound(const Arena& arena, int max_vertices) {
  if (arena.NumVertices() > max_vertices || arena.NumVertices() > 31)
    throw Error(ErrorCode::kTooLarge, "feasible inf-set enumeration limited to " +
                                          std::to_string(std::min(max_vertices, 31)) +
                                          " vertices");
}

}  // namespace

std::vector<VertexSet> FeasibleInfSets(const Arena& arena, Vertex from, int max_vertices) {
  CheckFeasibleBound(arena, max_vertices);
  int sources[] = {from};
  graph::Mask reach = graph::Reachable(arena.Graph(), sources);
  Bits allowed = 0;
  for (Vertex v = 0; v < arena.NumVertices(); ++v)
    if (reach[v]) allowed |= Bits{1} << v;
  return CycleSetsWithin(arena, allowed);
}

std::vector<VertexSet> AllFeasibleInfSets(const Arena& arena, int max_vertices) {
  CheckFeasibleBound(arena, max_vertices);
  Bits all = arena.NumVertices() == 32 ? ~Bits{0} : (Bits{1} << arena.NumVertices()) - 1;
  return CycleSetsWithin(arena, all);
}

bool IsFeasibleCycleSet(const Arena& arena, const VertexSet& set) {
  if (arena.NumVertices() > 31) {
    // Generic path for large arenas.
    if (set.empty()) return false;
    graph::Mask within(arena.NumVertices(), 0);
    for (Vertex v : set) within[v] = 1;
    auto comps = graph::NontrivialComponents(arena.Graph(), within);
    return comps.size() == 1 && comps.front() == set;
  }
  Bits bits = 0;
  for (Vertex v : set) bits |= Bits{1} << v;
  return IsCycleSet(SuccessorBits(arena), bits);
}

StrategyMachine::StrategyMachine(int player, int num_vertices, int num_states)
    : player_(player),
      num_vertices_(num_vertices),
      num_states_(num_states),
      controls_(num_vertices, 0),
      update_(static_cast<size_t>(num_vertices) * num_states, 0),
      choice_(static_cast<size_t>(num_vertices) * num_states, -1) {}

int StrategyMachine::MemoryBits() const {
  return num_states_ <= 1 ? 0 : std::bit_width(static_cast<unsigned>(num_states_ - 1));
}

bool StrategyMachine::IsValidFor(const Arena& arena) const {
  if (num_vertices_ != arena.NumVertices() || num_states_ < 1) return false;
  for (Vertex v = 0; v < num_vertices_; ++v) {
    for (int q = 0; q < num_states_; ++q) {
      int next = Update(v, q);
      if (next < 0 || next >= num_states_) return false;
      if (Controls(v) && !arena.HasEdge(v, Choice(v, q))) return false;
    }
  }
  return true;
}

StrategyMachine StrategyMachine::Positional(int player, const std::vector<Vertex>& choice) {
  StrategyMachine m(player, static_cast<int>(choice.size()), 1);
  for (Vertex v = 0; v < static_cast<Vertex>(choice.size()); ++v) {
    if (choice[v] >= 0) {
      m.SetControls(v, true);
      m.SetChoice(v, 0, choice[v]);
    }
  }
  return m;
}

StrategyMachine MinimizeMachine(const StrategyMachine& machine) {
  const int n = machine.NumVertices();
  const int states = machine.NumStates();
  // Reachable states from the initial one.
  std::vector<char> reach(states, 0);
  std::vector<int> order{0};
  reach[0] = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    for (Vertex v = 0; v < n; ++v) {
      int next = machine.Update(v, order[i]);
      if (!reach[next]) {
        reach[next] = 1;
        order.push_back(next);
      }
    }
  }
  // Partition refinement on reachable states.
  std::vector<int> cls(states, -1);
  {
    std::map<std::vector<int>, int> sig_ids;
    for (int q : order) {
      std::vector<int> sig;
      for (Vertex v = 0; v < n; ++v) sig.push_back(machine.Controls(v) ? machine.Choice(v, q) : -1);
      cls[q] = sig_ids.emplace(sig, static_cast<int>(sig_ids.size())).first->second;
    }
  }
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_cls(states, -1);
    for (int q : order) {
      std::vector<int> sig{cls[q]};
      for (Vertex v = 0; v < n; ++v) sig.push_back(cls[machine.Update(v, q)]);
      next_cls[q] = sig_ids.emplace(sig, static_cast<int>(sig_ids.size())).first->second;
    }
    bool stable = true;
    int before = 1 + *std::max_element(cls.begin(), cls.end());
    int after = static_cast<int>(sig_ids.size());
    if (after != before) stable = false;
    cls = std::move(next_cls);
    if (stable) break;
  }
  // Number classes breadth-first from the initial state.
  std::vector<int> number(states, -1);
  std::vector<int> representative;
  std::map<int, int> class_number;
  auto visit = [&](int q) {
    auto [it, inserted] = class_number.emplace(cls[q], static_cast<int>(representative.size()));
    if (inserted) representative.push_back(q);
    return it->second;
  };
  visit(0);
  for (size_t i = 0; i < representative.size(); ++i)
    for (Vertex v = 0; v < n; ++v) visit(machine.Update(v, representative[i]));

  StrategyMachine out(machine.player(), n, static_cast<int>(representative.size()));
  for (Vertex v = 0; v < n; ++v) out.SetControls(v, machine.Controls(v));
  for (int s = 0; s < static_cast<int>(representative.size()); ++s) {
    int q = representative[s];
    for (Vertex v = 0; v < n; ++v) {
      out.SetUpdate(v, s, class_number.at(cls[machine.Update(v, q)]));
      if (machine.Controls(v)) out.SetChoice(v, s, machine.Choice(v, q));
    }
  }
  return out;
}

std::string ToDot(const StrategyMachine& machine, const Arena& arena) {
  std::ostringstream out;
  out << "digraph machine {\n";
  for (int q = 0; q < machine.NumStates(); ++q)
    out << "  q" << q << (q == 0 ? " [shape=doublecircle];\n" : " [shape=circle];\n");
  for (int q = 0; q < machine.NumStates(); ++q) {
    for (Vertex v = 0; v < arena.NumVertices(); ++v) {
      out << "  q" << q << " -> q" << machine.Update(v, q) << " [label=\"" << arena.Id(v);
      if (machine.Controls(v)) out << " / " << arena.Id(machine.Choice(v, q));
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

std::vector<int> Controllers(const Arena& arena, std::span<const StrategyMachine> machines,
                             bool require_total) {
  std::vector<int> controller(arena.NumVertices(), -1);
  for (int i = 0; i < static_cast<int>(machines.size()); ++i) {
    for (Vertex v = 0; v < arena.NumVertices(); ++v) {
      if (!machines[i].Controls(v)) continue;
      if (controller[v] != -1)
        throw Error(ErrorCode::kInvalidInput,
                    "vertex '" + arena.Id(v) + "' controlled by two machines");
      controller[v] = i;
    }
  }
  if (require_total) {
    for (Vertex v = 0; v < arena.NumVertices(); ++v)
      if (controller[v] == -1)
        throw Error(ErrorCode::kInvalidInput,
                    "no machine controls vertex '" + arena.Id(v) + "'");
  }
  return controller;
}

}  // namespace

Lasso InducedLasso(const Arena& arena, std::span<const StrategyMachine> machines, Vertex from) {
  return InducedLasso(arena, machines, from, std::vector<int>(machines.size(), 0));
}

Lasso InducedLasso(const Arena& arena, std::span<const StrategyMachine> machines, Vertex from,
                   const std::vector<int>& memory) {
  std::vector<int> controller = Controllers(arena, machines, true);
  std::map<std::vector<int>, int> seen;
  std::vector<Vertex> walk;
  std::vector<int> key(machines.size() + 1, 0);
  key[0] = from;
  std::copy(memory.begin(), memory.end(), key.begin() + 1);
  for (;;) {
    auto [it, inserted] = seen.emplace(key, static_cast<int>(walk.size()));
    if (!inserted) {
      Lasso lasso;
      lasso.stem.assign(walk.begin(), walk.begin() + it->second);
      lasso.cycle.assign(walk.begin() + it->second, walk.end());
      return NormalizeLasso(std::move(lasso));
    }
    Vertex v = key[0];
    walk.push_back(v);
    int c = controller[v];
    Vertex next = machines[c].Choice(v, key[c + 1]);
    for (size_t i = 0; i < machines.size(); ++i) key[i + 1] = machines[i].Update(v, key[i + 1]);
    key[0] = next;
  }
}

Lasso InducedLasso(const Arena& arena, const StrategyProfile& profile, Vertex from) {
  return InducedLasso(arena, std::span<const StrategyMachine>(profile.machines), from);
}

ProductGraph FixMachines(const Arena& arena, std::span<const StrategyMachine> machines,
                         Vertex from, std::vector<std::vector<int>>* states, int max_nodes,
                         const std::vector<int>* initial_memory) {
  std::vector<int> controller = Controllers(arena, machines, false);
  ProductGraph product;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> keys;
  auto intern = [&](std::vector<int> key) {
    auto [it, inserted] = index.emplace(key, static_cast<int>(keys.size()));
    if (inserted) {
      if (static_cast<int>(keys.size()) >= max_nodes)
        throw Error(ErrorCode::kTooLarge, "product exceeds " + std::to_string(max_nodes) +
                                              " nodes");
      keys.push_back(std::move(key));
      product.graph.succ.emplace_back();
      product.projection.push_back(keys.back()[0]);
    }
    return it->second;
  };
  std::vector<int> start_key(machines.size() + 1, 0);
  start_key[0] = from;
  if (initial_memory)
    std::copy(initial_memory->begin(), initial_memory->end(), start_key.begin() + 1);
  product.start = intern(start_key);
  for (size_t i = 0; i < keys.size(); ++i) {
    std::vector<int> key = keys[i];
    Vertex v = key[0];
    std::vector<int> next_key(key.size());
    for (size_t m = 0; m < machines.size(); ++m) next_key[m + 1] = machines[m].Update(v, key[m + 1]);
    std::vector<Vertex> moves;
    if (controller[v] >= 0)
      moves.push_back(machines[controller[v]].Choice(v, key[controller[v] + 1]));
    else
      moves = arena.Successors(v);
    for (Vertex w : moves) {
      next_key[0] = w;
      int node = intern(next_key);
      product.graph.succ[i].push_back(node);
    }
  }
  if (states) {
    states->clear();
    for (auto& key : keys) states->emplace_back(key.begin() + 1, key.end());
  }
  return product;
}

std::optional<std::vector<int>> FindCycleWithProjection(const ProductGraph& product,
                                                        const VertexSet& target,
                                                        const graph::Mask& reachable) {
  graph::Mask within(product.size(), 0);
  for (int node = 0; node < product.size(); ++node) {
    if (reachable[node] &&
        std::binary_search(target.begin(), target.end(), product.projection[node]))
      within[node] = 1;
  }
  for (auto& comp : graph::NontrivialComponents(product.graph, within)) {
    VertexSet proj;
    for (int node : comp) proj.push_back(product.projection[node]);
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    if (proj == target) return comp;
  }
  return std::nullopt;
}

NodeLasso LassoThrough(const ProductGraph& product, const std::vector<int>& nodes,
                       const graph::Mask& within) {
  graph::Mask goal(product.size(), 0);
  for (int node : nodes) goal[node] = 1;
  auto path = graph::ShortestPath(product.graph, product.start, goal, within);
  if (!path) throw Error(ErrorCode::kInvalidInput, "cycle set unreachable from product start");
  int entry = path->back();
  std::vector<int> ordered{entry};
  for (int node : nodes)
    if (node != entry) ordered.push_back(node);
  NodeLasso lasso;
  lasso.stem.assign(path->begin(), path->end() - 1);
  lasso.cycle = graph::CoveringCycle(product.graph, ordered);
  return lasso;
}

Lasso ProjectLasso(const ProductGraph& product, const NodeLasso& lasso) {
  Lasso out;
  for (int node : lasso.stem) out.stem.push_back(product.projection[node]);
  for (int node : lasso.cycle) out.cycle.push_back(product.projection[node]);
  return NormalizeLasso(std::move(out));
}

long long ClampBudget(long long budget, long long cost, std::pair<long long, long long> caps) {
  return std::max(std::min(budget + cost, caps.second), caps.first);
}

EnergyProduct BuildEnergyProduct(const Arena& arena, const EnergySpec& spec, int max_nodes) {
  const int players = arena.NumPlayers();
  if (static_cast<int>(spec.weight.size()) != players ||
      static_cast<int>(spec.caps.size()) != players ||
      static_cast<int>(spec.priority.size()) != arena.NumVertices())
    throw Error(ErrorCode::kInvalidInput, "energy data does not match the arena");
  for (Player p = 0; p < players; ++p) {
    auto [lo, hi] = spec.caps[p];
    if (!(lo <= 0 && 0 <= hi))
      throw Error(ErrorCode::kInvalidInput, "energy caps must satisfy min <= 0 <= max");
    if (static_cast<int>(spec.weight[p].size()) != arena.NumVertices())
      throw Error(ErrorCode::kInvalidInput, "energy weights missing vertices");
  }

  EnergyProduct out;
  // key = vertex, budgets..., minima...
  std::map<std::vector<long long>, int> index;
  std::vector<std::vector<long long>> keys;
  std::vector<std::vector<int>> succ;
  auto intern = [&](std::vector<long long> key) {
    auto [it, inserted] = index.emplace(key, static_cast<int>(keys.size()));
    if (inserted) {
      if (static_cast<int>(keys.size()) >= max_nodes)
        throw Error(ErrorCode::kTooLarge, "energy product exceeds " +
                                              std::to_string(max_nodes) + " nodes");
      keys.push_back(std::move(key));
      succ.emplace_back();
    }
    return it->second;
  };
  auto enter = [&](Vertex v, const std::vector<long long>* from) {
    std::vector<long long> key(1 + 2 * players);
    key[0] = v;
    for (Player p = 0; p < players; ++p) {
      long long before = from ? (*from)[1 + p] : 0;
      long long low = from ? (*from)[1 + players + p] : 0;
      long long b = ClampBudget(before, spec.weight[p][v], spec.caps[p]);
      key[1 + p] = b;
      key[1 + players + p] = std::min(low, b);
    }
    return key;
  };
  intern(enter(arena.Start(), nullptr));
  for (size_t i = 0; i < keys.size(); ++i) {
    std::vector<long long> key = keys[i];
    for (Vertex w : arena.Successors(static_cast<Vertex>(key[0]))) {
      int node = intern(enter(w, &key));
      succ[i].push_back(node);
    }
  }

  RawArena raw;
  raw.players = arena.Players();
  auto node_id = [&](size_t i) {
    const auto& key = keys[i];
    std::string id = arena.Id(static_cast<Vertex>(key[0])) + "|b=";
    for (Player p = 0; p < players; ++p) id += (p ? "," : "") + std::to_string(key[1 + p]);
    id += "|m=";
    for (Player p = 0; p < players; ++p)
      id += (p ? "," : "") + std::to_string(key[1 + players + p]);
    return id;
  };
  for (size_t i = 0; i < keys.size(); ++i) {
    Vertex v = static_cast<Vertex>(keys[i][0]);
    raw.vertices.push_back({node_id(i), arena.PlayerName(arena.Owner(v))});
    for (int j : succ[i]) raw.edges.emplace_back(node_id(i), node_id(j));
  }
  raw.start = node_id(0);
  out.arena = BuildArena(raw);
  // BuildArena keeps declaration order, so node i is vertex i.
  for (size_t i = 0; i < keys.size(); ++i) {
    Vertex v = static_cast<Vertex>(keys[i][0]);
    out.base.push_back(v);
    out.budget.emplace_back(keys[i].begin() + 1, keys[i].begin() + 1 + players);
    out.minimum.emplace_back(keys[i].begin() + 1 + players, keys[i].end());
    out.priority.push_back(spec.priority[v]);
  }
  return out;
}

}  // namespace eqsynth
