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

#include "eqsynth/winlose.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace eqsynth {

WinLoseGame WinLoseGame::ForPlayer(const Arena& arena, Player player, Objective objective) {
  WinLoseGame game{arena, std::vector<char>(arena.NumVertices(), 0), std::move(objective)};
  for (Vertex v = 0; v < arena.NumVertices(); ++v) game.side0[v] = arena.Owner(v) == player;
  return game;
}

namespace {

void CheckSet(const WinLoseGame& game, const VertexSet& set, const char* what) {
  for (Vertex v : set)
    if (v < 0 || v >= game.arena.NumVertices())
      throw Error(ErrorCode::kInvalidInput, std::string(what) + " mentions an unknown vertex");
}

VertexSet Sorted(VertexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

graph::Mask ToMask(int n, const VertexSet& set) {
  graph::Mask mask(n, 0);
  for (Vertex v : set) mask[v] = 1;
  return mask;
}

VertexSet FromMask(const graph::Mask& mask) {
  VertexSet set;
  for (int v = 0; v < static_cast<int>(mask.size()); ++v)
    if (mask[v]) set.push_back(v);
  return set;
}

std::set<VertexSet> FamilyOf(const Muller& muller) {
  std::set<VertexSet> family;
  for (const auto& s : muller.family) family.insert(Sorted(s));
  return family;
}

}  // namespace

void ValidateGame(const WinLoseGame& game) {
  if (static_cast<int>(game.side0.size()) != game.arena.NumVertices())
    throw Error(ErrorCode::kInvalidInput, "side assignment does not cover the arena");
  std::visit(
      [&](const auto& obj) {
        using T = std::decay_t<decltype(obj)>;
        if constexpr (std::is_same_v<T, Reachability>) {
          CheckSet(game, obj.target, "reachability target");
        } else if constexpr (std::is_same_v<T, Safety>) {
          CheckSet(game, obj.safe, "safe set");
        } else if constexpr (std::is_same_v<T, Parity>) {
          if (static_cast<int>(obj.priority.size()) != game.arena.NumVertices())
            throw Error(ErrorCode::kInvalidInput, "priorities must cover every vertex");
          for (int p : obj.priority)
            if (p < 0) throw Error(ErrorCode::kInvalidInput, "priorities must be natural numbers");
        } else {
          for (const auto& s : obj.family) CheckSet(game, s, "Muller family");
        }
      },
      game.objective);
}

bool Side0WinsPlay(const WinLoseGame& game, const Lasso& lasso) {
  return std::visit(
      [&](const auto& obj) -> bool {
        using T = std::decay_t<decltype(obj)>;
        auto visits = [&](const graph::Mask& mask) {
          for (Vertex v : lasso.stem)
            if (mask[v]) return true;
          for (Vertex v : lasso.cycle)
            if (mask[v]) return true;
          return false;
        };
        const int n = game.arena.NumVertices();
        if constexpr (std::is_same_v<T, Reachability>) {
          return visits(ToMask(n, obj.target));
        } else if constexpr (std::is_same_v<T, Safety>) {
          graph::Mask unsafe = ToMask(n, obj.safe);
          for (auto& c : unsafe) c = !c;
          return !visits(unsafe);
        } else if constexpr (std::is_same_v<T, Parity>) {
          int least = obj.priority[lasso.cycle.front()];
          for (Vertex v : lasso.cycle) least = std::min(least, obj.priority[v]);
          return least % 2 == 0;
        } else {
          return FamilyOf(obj).count(InfSet(lasso)) > 0;
        }
      },
      game.objective);
}

// ---------------------------------------------------------------------------
// Generic two-sided graph machinery.

namespace {

struct Preds {
  std::vector<std::vector<int>> pred;
  explicit Preds(const graph::Digraph& g) : pred(g.size()) {
    for (int v = 0; v < g.size(); ++v)
      for (int w : g.succ[v]) pred[w].push_back(v);
  }
};

// Attractor for `side` inside `within`. Writes a choice for side-owned nodes
// added by the fixpoint: the first successor with a lower level.
graph::Mask AttractorIn(const graph::Digraph& g, const Preds& preds, const std::vector<int>& owner,
                        int side, const graph::Mask& target, const graph::Mask& within,
                        std::vector<int>* choice) {
  const int n = g.size();
  std::vector<int> level(n, -1);
  std::vector<int> remaining(n, 0);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    if (!within[v]) continue;
    if (target[v]) {
      level[v] = 0;
      queue.push_back(v);
    } else {
      for (int w : g.succ[v]) remaining[v] += within[w] ? 1 : 0;
    }
  }
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int u : preds.pred[w]) {
      if (!within[u] || level[u] != -1) continue;
      if (owner[u] == side || --remaining[u] == 0) {
        level[u] = level[w] + 1;
        queue.push_back(u);
      }
    }
  }
  graph::Mask attr(n, 0);
  for (int v = 0; v < n; ++v) {
    if (level[v] == -1) continue;
    attr[v] = 1;
    if (choice && level[v] > 0 && owner[v] == side) {
      for (int w : g.succ[v]) {
        if (within[w] && level[w] != -1 && level[w] < level[v]) {
          (*choice)[v] = w;
          break;
        }
      }
    }
  }
  return attr;
}

int FirstIn(const graph::Digraph& g, int v, const graph::Mask& within) {
  for (int w : g.succ[v])
    if (within[w]) return w;
  return -1;
}

class Zielonka {
 public:
  explicit Zielonka(const ParityGraph& game)
      : game_(game), preds_(game.graph), choice_(game.graph.size(), -1) {}

  ParitySolution Run() {
    graph::Mask all(game_.graph.size(), 1);
    graph::Mask win0 = Solve(all);
    for (int v = 0; v < game_.graph.size(); ++v)
      if (choice_[v] == -1 && !game_.graph.succ[v].empty()) choice_[v] = game_.graph.succ[v][0];
    return {std::move(win0), std::move(choice_)};
  }

 private:
  // Returns the side-0 winning region inside `within` (a trap for both).
  graph::Mask Solve(const graph::Mask& within) {
    const int n = game_.graph.size();
    int least = -1;
    for (int v = 0; v < n; ++v)
      if (within[v] && (least == -1 || game_.priority[v] < least)) least = game_.priority[v];
    graph::Mask win0(n, 0);
    if (least == -1) return win0;
    const int i = least % 2;
    graph::Mask top(n, 0);
    for (int v = 0; v < n; ++v) top[v] = within[v] && game_.priority[v] == least;
    graph::Mask attr = AttractorIn(game_.graph, preds_, game_.side, i, top, within, &choice_);
    graph::Mask sub = Minus(within, attr);
    graph::Mask sub_win0 = Solve(sub);
    graph::Mask sub_opp(n, 0);  // winning region of 1-i inside sub
    bool opp_empty = true;
    for (int v = 0; v < n; ++v) {
      if (!sub[v]) continue;
      bool opp = (i == 0) ? !sub_win0[v] : sub_win0[v];
      sub_opp[v] = opp;
      opp_empty = opp_empty && !opp;
    }
    if (opp_empty) {
      for (int v = 0; v < n; ++v) {
        if (top[v] && game_.side[v] == i) choice_[v] = FirstIn(game_.graph, v, within);
        if (within[v]) win0[v] = (i == 0);
      }
      return win0;
    }
    graph::Mask back =
        AttractorIn(game_.graph, preds_, game_.side, 1 - i, sub_opp, within, &choice_);
    graph::Mask rest = Minus(within, back);
    graph::Mask rest_win0 = Solve(rest);
    for (int v = 0; v < n; ++v) {
      if (back[v]) win0[v] = (i == 1);
      else if (rest[v]) win0[v] = rest_win0[v];
    }
    return win0;
  }

  static graph::Mask Minus(const graph::Mask& a, const graph::Mask& b) {
    graph::Mask out(a.size(), 0);
    for (size_t v = 0; v < a.size(); ++v) out[v] = a[v] && !b[v];
    return out;
  }

  const ParityGraph& game_;
  Preds preds_;
  std::vector<int> choice_;
};

std::vector<int> Sides(const WinLoseGame& game) {
  std::vector<int> side(game.arena.NumVertices());
  for (Vertex v = 0; v < game.arena.NumVertices(); ++v) side[v] = game.Side(v);
  return side;
}

StrategyMachine SideMachine(const WinLoseGame& game, int side, const std::vector<int>& choice) {
  std::vector<Vertex> own(game.arena.NumVertices(), -1);
  for (Vertex v = 0; v < game.arena.NumVertices(); ++v)
    if (game.Side(v) == side) own[v] = choice[v] >= 0 ? choice[v] : game.arena.Successors(v)[0];
  return StrategyMachine::Positional(side, own);
}

}  // namespace

ParitySolution SolveParityGraph(const ParityGraph& game) { return Zielonka(game).Run(); }

AttractorResult Attractor(const WinLoseGame& game, int side, const VertexSet& target) {
  const int n = game.arena.NumVertices();
  std::vector<int> choice(n, -1);
  Preds preds(game.arena.Graph());
  graph::Mask attr = AttractorIn(game.arena.Graph(), preds, Sides(game), side, ToMask(n, target),
                                 graph::Mask(n, 1), &choice);
  return {FromMask(attr), SideMachine(game, side, choice)};
}

SolveResult SolveParity(const WinLoseGame& game) {
  ValidateGame(game);
  const auto& parity = std::get<Parity>(game.objective);
  ParityGraph pg{game.arena.Graph(), Sides(game), parity.priority};
  ParitySolution sol = SolveParityGraph(pg);
  SolveResult result;
  for (Vertex v = 0; v < game.arena.NumVertices(); ++v)
    (sol.win0[v] ? result.win0 : result.win1).push_back(v);
  result.strategy0 = SideMachine(game, 0, sol.choice);
  result.strategy1 = SideMachine(game, 1, sol.choice);
  return result;
}

namespace {

// Vertices win by forcing `target` for `side`; the other side stays out.
SolveResult SolveByAttractor(const WinLoseGame& game, int side, const VertexSet& target) {
  const int n = game.arena.NumVertices();
  const auto& g = game.arena.Graph();
  std::vector<int> choice(n, -1);
  Preds preds(g);
  graph::Mask attr =
      AttractorIn(g, preds, Sides(game), side, ToMask(n, target), graph::Mask(n, 1), &choice);
  graph::Mask outside(n, 0);
  for (int v = 0; v < n; ++v) outside[v] = !attr[v];
  for (int v = 0; v < n; ++v)
    if (outside[v] && game.Side(v) != side) choice[v] = FirstIn(g, v, outside);
  SolveResult result;
  for (Vertex v = 0; v < n; ++v) ((attr[v] == (side == 0)) ? result.win0 : result.win1).push_back(v);
  result.strategy0 = SideMachine(game, 0, choice);
  result.strategy1 = SideMachine(game, 1, choice);
  return result;
}

}  // namespace

SolveResult SolveReachability(const WinLoseGame& game) {
  ValidateGame(game);
  return SolveByAttractor(game, 0, std::get<Reachability>(game.objective).target);
}

SolveResult SolveSafety(const WinLoseGame& game) {
  ValidateGame(game);
  const auto& safe = std::get<Safety>(game.objective).safe;
  graph::Mask safe_mask = ToMask(game.arena.NumVertices(), safe);
  VertexSet unsafe;
  for (Vertex v = 0; v < game.arena.NumVertices(); ++v)
    if (!safe_mask[v]) unsafe.push_back(v);
  return SolveByAttractor(game, 1, unsafe);
}

// ---------------------------------------------------------------------------
// Muller games through the latest appearance record.

namespace {

using Record = std::uint64_t;  // 4 bits per entry, entry 0 lowest

int RecordAt(Record r, int i) { return static_cast<int>((r >> (4 * i)) & 0xF); }

int RecordPos(Record r, int n, int v) {
  for (int i = 0; i < n; ++i)
    if (RecordAt(r, i) == v) return i;
  return -1;
}

// Moves v to the front.
Record MoveToFront(Record r, int n, int v) {
  Record out = static_cast<Record>(v);
  int k = 1;
  for (int i = 0; i < n; ++i) {
    int x = RecordAt(r, i);
    if (x == v) continue;
    out |= static_cast<Record>(x) << (4 * k++);
  }
  return out;
}

Record IdentityRecord(int n) {
  Record r = 0;
  for (int i = 0; i < n; ++i) r |= static_cast<Record>(i) << (4 * i);
  return r;
}

std::uint32_t Prefix(Record r, int len) {
  std::uint32_t bits = 0;
  for (int i = 0; i < len; ++i) bits |= 1u << RecordAt(r, i);
  return bits;
}

}  // namespace

SolveResult SolveMuller(const WinLoseGame& game, int max_nodes) {
  ValidateGame(game);
  const Arena& arena = game.arena;
  const int n = arena.NumVertices();
  if (n > 15) throw Error(ErrorCode::kTooLarge, "Muller solving limited to 15 vertices");
  std::unordered_set<std::uint32_t> family;
  for (const auto& s : std::get<Muller>(game.objective).family) {
    std::uint32_t bits = 0;
    for (Vertex v : s) bits |= 1u << v;
    family.insert(bits);
  }

  struct Key {
    Vertex v;
    Record record;
    int hit;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      return std::hash<Record>()(k.record) * 31 + static_cast<size_t>(k.v) * 17 + k.hit;
    }
  };
  std::unordered_map<Key, int, KeyHash> index;
  std::vector<Key> keys;
  ParityGraph pg;
  auto intern = [&](const Key& key) {
    auto [it, inserted] = index.emplace(key, static_cast<int>(keys.size()));
    if (inserted) {
      if (static_cast<int>(keys.size()) >= max_nodes)
        throw Error(ErrorCode::kTooLarge,
                    "record product exceeds " + std::to_string(max_nodes) + " nodes");
      keys.push_back(key);
      pg.graph.succ.emplace_back();
      pg.side.push_back(game.Side(key.v));
      bool good = family.count(Prefix(key.record, key.hit + 1)) > 0;
      pg.priority.push_back(2 * n - 2 * key.hit - (good ? 0 : 1));
    }
    return it->second;
  };
  const Record identity = IdentityRecord(n);
  auto step = [&](Record old, Vertex v) {
    return Key{v, MoveToFront(old, n, v), RecordPos(old, n, v)};
  };
  std::vector<int> start(n);
  for (Vertex v = 0; v < n; ++v) start[v] = intern(step(identity, v));
  for (size_t i = 0; i < keys.size(); ++i) {
    Key key = keys[i];
    for (Vertex w : arena.Successors(key.v)) {
      int node = intern(step(key.record, w));
      pg.graph.succ[i].push_back(node);
    }
  }
  ParitySolution sol = SolveParityGraph(pg);

  // Machines remember the record before the current vertex.
  std::vector<Record> records{identity};
  std::unordered_map<Record, int> record_state{{identity, 0}};
  for (size_t i = 0; i < records.size(); ++i) {
    for (Vertex v = 0; v < n; ++v) {
      Record next = MoveToFront(records[i], n, v);
      if (record_state.emplace(next, static_cast<int>(records.size())).second)
        records.push_back(next);
    }
  }
  const int states = static_cast<int>(records.size());
  SolveResult result;
  for (Vertex v = 0; v < n; ++v) (sol.win0[start[v]] ? result.win0 : result.win1).push_back(v);
  StrategyMachine machines[2] = {StrategyMachine(0, n, states), StrategyMachine(1, n, states)};
  for (int side = 0; side < 2; ++side) {
    auto& m = machines[side];
    for (Vertex v = 0; v < n; ++v) {
      m.SetControls(v, game.Side(v) == side);
      for (int q = 0; q < states; ++q) {
        Key key = step(records[q], v);
        m.SetUpdate(v, q, record_state.at(key.record));
        if (game.Side(v) != side) continue;
        auto it = index.find(key);
        Vertex to = arena.Successors(v)[0];
        if (it != index.end()) to = keys[sol.choice[it->second]].v;
        m.SetChoice(v, q, to);
      }
    }
  }
  result.strategy0 = MinimizeMachine(machines[0]);
  result.strategy1 = MinimizeMachine(machines[1]);
  result.memory_bits_used =
      std::max(result.strategy0.MemoryBits(), result.strategy1.MemoryBits());
  return result;
}

SolveResult Solve(const WinLoseGame& game, int max_nodes) {
  switch (game.objective.index()) {
    case 0: return SolveReachability(game);
    case 1: return SolveSafety(game);
    case 2: return SolveParity(game);
    default: return SolveMuller(game, max_nodes);
  }
}

// ---------------------------------------------------------------------------
// Plays lost by a fixed machine.

namespace {

// Where the free opponent can make `side` lose inside a product: staying
// forever in one of `cycles` loses, and so does touching one of `hits`.
// Paths towards either must stay inside `within`.
struct LossShape {
  graph::Mask within;
  std::vector<std::vector<int>> cycles;
  std::vector<int> hits;
};

LossShape LossesFor(const WinLoseGame& game, int side, const ProductGraph& product) {
  const int size = product.size();
  const int n = game.arena.NumVertices();
  LossShape shape;
  shape.within.assign(size, 1);
  auto project = [&](const graph::Mask& vertices) {
    graph::Mask nodes(size, 0);
    for (int i = 0; i < size; ++i) nodes[i] = vertices[product.projection[i]];
    return nodes;
  };
  // "Avoid `region` forever" for the opponent, or "touch `region`".
  auto avoid_forever = [&](const graph::Mask& region) {
    graph::Mask outside = project(region);
    for (auto& c : outside) c = !c;
    shape.within = outside;
    shape.cycles = graph::NontrivialComponents(product.graph, outside);
  };
  auto touch = [&](const graph::Mask& region) {
    graph::Mask nodes = project(region);
    for (int i = 0; i < size; ++i)
      if (nodes[i]) shape.hits.push_back(i);
  };
  std::visit(
      [&](const auto& obj) {
        using T = std::decay_t<decltype(obj)>;
        if constexpr (std::is_same_v<T, Reachability>) {
          graph::Mask target = ToMask(n, obj.target);
          if (side == 0) avoid_forever(target);
          else touch(target);
        } else if constexpr (std::is_same_v<T, Safety>) {
          graph::Mask unsafe = ToMask(n, obj.safe);
          for (auto& c : unsafe) c = !c;
          if (side == 0) touch(unsafe);
          else avoid_forever(unsafe);
        } else if constexpr (std::is_same_v<T, Parity>) {
          std::set<int> priorities(obj.priority.begin(), obj.priority.end());
          for (int p : priorities) {
            if (p % 2 == side) continue;  // p good for side
            graph::Mask high(size, 0);
            for (int i = 0; i < size; ++i) high[i] = obj.priority[product.projection[i]] >= p;
            for (auto& comp : graph::NontrivialComponents(product.graph, high)) {
              bool has_p = false;
              for (int node : comp) has_p = has_p || obj.priority[product.projection[node]] == p;
              if (has_p) shape.cycles.push_back(comp);
            }
          }
        } else {
          std::set<VertexSet> family = FamilyOf(obj);
          for (const auto& target : AllFeasibleInfSets(game.arena, 31)) {
            bool good0 = family.count(target) > 0;
            if (good0 == (side == 0)) continue;
            graph::Mask into = project(ToMask(n, target));
            for (auto& comp : graph::NontrivialComponents(product.graph, into)) {
              std::vector<char> seen(n, 0);
              int distinct = 0;
              for (int node : comp)
                if (!seen[product.projection[node]]++) ++distinct;
              if (distinct == static_cast<int>(target.size())) shape.cycles.push_back(comp);
            }
          }
        }
      },
      game.objective);
  return shape;
}

// Full product of the arena with one machine over every (vertex, state).
ProductGraph FullProduct(const Arena& arena, const StrategyMachine& machine) {
  const int n = arena.NumVertices();
  const int s = machine.NumStates();
  ProductGraph product;
  product.graph.succ.resize(static_cast<size_t>(n) * s);
  for (Vertex v = 0; v < n; ++v) {
    for (int q = 0; q < s; ++q) {
      int node = v * s + q;
      product.projection.push_back(v);
      int next = machine.Update(v, q);
      if (machine.Controls(v)) {
        product.graph.succ[node].push_back(machine.Choice(v, q) * s + next);
      } else {
        for (Vertex w : arena.Successors(v)) product.graph.succ[node].push_back(w * s + next);
      }
    }
  }
  return product;
}

void CheckMachineSide(const WinLoseGame& game, int side, const StrategyMachine& machine) {
  for (Vertex v = 0; v < game.arena.NumVertices(); ++v)
    if (machine.Controls(v) != (game.Side(v) == side))
      throw Error(ErrorCode::kInvalidInput, "machine does not control exactly its side");
  if (!machine.IsValidFor(game.arena))
    throw Error(ErrorCode::kInvalidInput, "machine is not valid for the arena");
}

}  // namespace

std::optional<Lasso> LosingPlay(const WinLoseGame& game, int side, const StrategyMachine& machine,
                                Vertex from) {
  CheckMachineSide(game, side, machine);
  const StrategyMachine machines[] = {machine};
  ProductGraph product = FixMachines(game.arena, machines, from);
  LossShape shape = LossesFor(game, side, product);
  if (!shape.hits.empty()) {
    graph::Mask goal(product.size(), 0);
    for (int node : shape.hits) goal[node] = 1;
    if (auto path = graph::ShortestPath(product.graph, product.start, goal)) {
      // Continue along first successors until a node repeats.
      std::vector<int> walk = *path;
      std::map<int, int> position;
      for (size_t i = 0; i < walk.size(); ++i) position.emplace(walk[i], static_cast<int>(i));
      for (;;) {
        int next = product.graph.succ[walk.back()][0];
        auto it = position.find(next);
        if (it != position.end()) {
          NodeLasso nl;
          nl.stem.assign(walk.begin(), walk.begin() + it->second);
          nl.cycle.assign(walk.begin() + it->second, walk.end());
          return ProjectLasso(product, nl);
        }
        position[next] = static_cast<int>(walk.size());
        walk.push_back(next);
      }
    }
  }
  for (const auto& comp : shape.cycles) {
    graph::Mask goal(product.size(), 0);
    for (int node : comp) goal[node] = 1;
    if (!graph::ShortestPath(product.graph, product.start, goal, shape.within)) continue;
    return ProjectLasso(product, LassoThrough(product, comp, shape.within));
  }
  return std::nullopt;
}

bool MachineWins(const WinLoseGame& game, int side, const StrategyMachine& machine, Vertex from) {
  return !LosingPlay(game, side, machine, from).has_value();
}

BruteForceResult BruteForceSolve(const WinLoseGame& game, int bits, long long cap) {
  ValidateGame(game);
  if (bits < 0 || bits > 4) throw Error(ErrorCode::kCapExceeded, "memory bound out of range");
  const Arena& arena = game.arena;
  const int n = arena.NumVertices();
  const int max_states = 1 << bits;
  BruteForceResult result;
  result.witness0.resize(n);
  result.witness1.resize(n);

  for (int side = 0; side < 2; ++side) {
    // Count machines first.
    long double total = 0;
    for (int s = 1; s <= max_states; ++s) {
      long double count = 1;
      for (Vertex v = 0; v < n; ++v) {
        for (int q = 0; q < s; ++q) {
          count *= s;
          if (game.Side(v) == side) count *= arena.Successors(v).size();
        }
      }
      total += count;
    }
    if (total > static_cast<long double>(cap))
      throw Error(ErrorCode::kCapExceeded, "machine enumeration exceeds the cap");

    auto& witness = side == 0 ? result.witness0 : result.witness1;
    auto done = [&] {
      for (Vertex v = 0; v < n; ++v)
        if (!witness[v] && !(side == 1 && result.witness0[v])) return false;
      return true;
    };
    for (int s = 1; s <= max_states && !done(); ++s) {
      // digits: update per (v,q), then choice index per owned (v,q)
      std::vector<int> radix;
      for (Vertex v = 0; v < n; ++v)
        for (int q = 0; q < s; ++q) radix.push_back(s);
      for (Vertex v = 0; v < n; ++v)
        if (game.Side(v) == side)
          for (int q = 0; q < s; ++q) radix.push_back(static_cast<int>(arena.Successors(v).size()));
      std::vector<int> digit(radix.size(), 0);
      for (;;) {
        StrategyMachine m(side, n, s);
        size_t d = 0;
        for (Vertex v = 0; v < n; ++v)
          for (int q = 0; q < s; ++q) m.SetUpdate(v, q, digit[d++]);
        for (Vertex v = 0; v < n; ++v) {
          if (game.Side(v) != side) continue;
          m.SetControls(v, true);
          for (int q = 0; q < s; ++q) m.SetChoice(v, q, arena.Successors(v)[digit[d++]]);
        }
        ProductGraph product = FullProduct(arena, m);
        LossShape shape = LossesFor(game, side, product);
        graph::Mask targets(product.size(), 0);
        for (const auto& comp : shape.cycles)
          for (int node : comp) targets[node] = 1;
        for (int node : shape.hits) targets[node] = 1;
        graph::Mask losing = graph::CanReach(product.graph, targets, shape.within);
        for (Vertex v = 0; v < n; ++v)
          if (!losing[v * s] && !witness[v]) witness[v] = m;
        if (done()) break;
        size_t k = 0;
        while (k < digit.size() && ++digit[k] == radix[k]) digit[k++] = 0;
        if (k == digit.size()) break;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (result.witness0[v]) result.win0.push_back(v);
    else if (result.witness1[v]) result.win1.push_back(v);
    else result.not_determined.push_back(v);
  }
  return result;
}

}  // namespace eqsynth
