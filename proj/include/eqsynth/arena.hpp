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

#ifndef EQSYNTH_ARENA_HPP_
#define EQSYNTH_ARENA_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqsynth/error.hpp"
#include "eqsynth/graph.hpp"

namespace eqsynth {

using Vertex = int;
using Player = int;
// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

inline constexpr int kDefaultFeasibleBound = 20;
inline constexpr int kDefaultProductBound = 100000;

// Arena as read from a description, before any checking.
struct RawArena {
  struct RawVertex {
    std::string id;
    std::string owner;
  };
  std::vector<std::string> players;
  std::vector<RawVertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string start;
};

struct ArenaIssue {
  ErrorCode code;
  std::string detail;
};

struct ArenaCheck;

// A finite directed graph with per-vertex ownership. Every vertex has a
// successor. Successor lists are sorted by vertex identifier so "first
// successor" means the lexicographically lowest one.
class Arena {
 public:
  int NumVertices() const { return static_cast<int>(ids_.size()); }
  int NumPlayers() const { return static_cast<int>(players_.size()); }
  const std::string& Id(Vertex v) const { return ids_[v]; }
  const std::vector<std::string>& Ids() const { return ids_; }
  const std::string& PlayerName(Player p) const { return players_[p]; }
  const std::vector<std::string>& Players() const { return players_; }
  Player Owner(Vertex v) const { return owner_[v]; }
  const std::vector<Vertex>& Successors(Vertex v) const { return graph_.succ[v]; }
  const graph::Digraph& Graph() const { return graph_; }
  Vertex Start() const { return start_; }
  bool HasEdge(Vertex u, Vertex v) const;

  std::optional<Vertex> Find(const std::string& id) const;
  Vertex IndexOf(const std::string& id) const;  // throws kInvalidInput
  std::optional<Player> FindPlayer(const std::string& name) const;

  Arena WithStart(Vertex v) const;
  RawArena ToRaw() const;

 private:
  friend ArenaCheck ValidateArena(const RawArena& raw);

  std::vector<std::string> players_;
  std::vector<std::string> ids_;
  std::vector<Player> owner_;
  graph::Digraph graph_;
  Vertex start_ = 0;
};

struct ArenaCheck {
  std::optional<Arena> arena;
  std::vector<ArenaIssue> issues;
};

// Returns the arena iff every invariant holds; otherwise lists every issue.
ArenaCheck ValidateArena(const RawArena& raw);
// Like ValidateArena but throws Error carrying the first issue's code.
Arena BuildArena(const RawArena& raw);

std::string ToDot(const Arena& arena);

// Ultimately periodic play stem . cycle^omega.
struct Lasso {
  std::vector<Vertex> stem;
  std::vector<Vertex> cycle;

  bool operator==(const Lasso&) const = default;
};

// Consecutive vertices (including the wrap-around) must be edges, the cycle
// non-empty, and the play must begin at `from`.
bool IsValidLasso(const Arena& arena, const Lasso& lasso, Vertex from);
VertexSet InfSet(const Lasso& lasso);
// Shortest equivalent form: cycle reduced to its primitive root, stem rolled
// back into the cycle as far as possible.
Lasso NormalizeLasso(Lasso lasso);

// All non-empty S such that some play from `from` visits exactly S
// infinitely often. Throws kTooLarge above `max_vertices` vertices.
std::vector<VertexSet> FeasibleInfSets(const Arena& arena, Vertex from,
                                       int max_vertices = kDefaultFeasibleBound);
// Union over all start vertices.
std::vector<VertexSet> AllFeasibleInfSets(const Arena& arena,
                                          int max_vertices = kDefaultFeasibleBound);
bool IsFeasibleCycleSet(const Arena& arena, const VertexSet& set);

// Finite-memory strategy. Memory states are 0..NumStates()-1 and state 0 is
// the initial (all-zero) state. At a vertex v with memory q (the memory just
// before reaching v) the machine moves to Choice(v, q) if it controls v, and
// its memory becomes Update(v, q).
class StrategyMachine {
 public:
  StrategyMachine() = default;
  StrategyMachine(int player, int num_vertices, int num_states);

  int player() const { return player_; }
  void set_player(int player) { player_ = player; }
  int NumStates() const { return num_states_; }
  int NumVertices() const { return num_vertices_; }
  int MemoryBits() const;

  bool Controls(Vertex v) const { return controls_[v] != 0; }
  void SetControls(Vertex v, bool value) { controls_[v] = value; }
  int Update(Vertex v, int state) const { return update_[Cell(v, state)]; }
  Vertex Choice(Vertex v, int state) const { return choice_[Cell(v, state)]; }
  void SetUpdate(Vertex v, int state, int next) { update_[Cell(v, state)] = next; }
  void SetChoice(Vertex v, int state, Vertex to) { choice_[Cell(v, state)] = to; }

  // Every controlled (v, q) picks a successor of v and updates stay in range.
  bool IsValidFor(const Arena& arena) const;

  // Memoryless machine from a per-vertex choice (-1 for uncontrolled).
  static StrategyMachine Positional(int player, const std::vector<Vertex>& choice);

  bool operator==(const StrategyMachine&) const = default;

 private:
  size_t Cell(Vertex v, int state) const {
    return static_cast<size_t>(v) * num_states_ + state;
  }

  int player_ = 0;
  int num_vertices_ = 0;
  int num_states_ = 1;
  std::vector<char> controls_;
  std::vector<int> update_;
  std::vector<Vertex> choice_;
};

// Merges behaviorally equivalent states, drops unreachable ones and numbers
// the rest in breadth-first order from the initial state.
StrategyMachine MinimizeMachine(const StrategyMachine& machine);

// One machine per player; machines[p] controls the vertices owned by p.
struct StrategyProfile {
  std::vector<StrategyMachine> machines;
};

std::string ToDot(const StrategyMachine& machine, const Arena& arena);

// Deterministic walk over (vertex, joint memory); every vertex must be
// controlled by exactly one of `machines`. The result is normalized.
Lasso InducedLasso(const Arena& arena, std::span<const StrategyMachine> machines, Vertex from);
Lasso InducedLasso(const Arena& arena, const StrategyProfile& profile, Vertex from);
// Same walk started with the given joint memory (one state per machine).
Lasso InducedLasso(const Arena& arena, std::span<const StrategyMachine> machines, Vertex from,
                   const std::vector<int>& memory);

// A graph whose nodes project onto arena vertices, e.g. an arena times the
// memory of some fixed machines.
struct ProductGraph {
  graph::Digraph graph;
  std::vector<Vertex> projection;
  int start = 0;

  int size() const { return graph.size(); }
};

// Product of `arena` with the fixed `machines`: at vertices they control the
// move is forced, elsewhere every successor remains available. Nodes are the
// (vertex, joint memory) pairs reachable from (from, initial memory).
// `states` receives the joint memory of each node when non-null.
ProductGraph FixMachines(const Arena& arena, std::span<const StrategyMachine> machines,
                         Vertex from, std::vector<std::vector<int>>* states = nullptr,
                         int max_nodes = kDefaultProductBound,
                         const std::vector<int>* initial_memory = nullptr);

// A reachable node set in which a play can stay forever while visiting each
// of its nodes infinitely often, and whose projection is exactly `target`.
std::optional<std::vector<int>> FindCycleWithProjection(const ProductGraph& product,
                                                        const VertexSet& target,
                                                        const graph::Mask& reachable);

// Node-level lasso from product.start that ends in a walk covering the
// strongly connected set `nodes`. The stem stays inside `within` if given.
struct NodeLasso {
  std::vector<int> stem;
  std::vector<int> cycle;
};
NodeLasso LassoThrough(const ProductGraph& product, const std::vector<int>& nodes,
                       const graph::Mask& within = {});
// Projects a node lasso onto arena vertices and normalizes it.
Lasso ProjectLasso(const ProductGraph& product, const NodeLasso& lasso);

// Energy-parity data: per-player integer weights on vertices, per-player caps
// min <= 0 <= max, and a priority per vertex.
struct EnergySpec {
  std::vector<std::vector<long long>> weight;   // [player][vertex]
  std::vector<std::pair<long long, long long>> caps;  // [player] = (min, max)
  std::vector<int> priority;                     // [vertex]
  // Per player: true if an even least priority is the good parity.
  std::vector<bool> wants_even;
};

// b' = max(min(b + c, cap_max), cap_min)
long long ClampBudget(long long budget, long long cost, std::pair<long long, long long> caps);

// Arena over (vertex, budgets, minimum-so-far budgets). The budget before the
// first vertex is 0 and the minimum ranges over all prefixes including the
// empty one.
struct EnergyProduct {
  Arena arena;
  std::vector<Vertex> base;                       // [node]
  std::vector<std::vector<long long>> budget;     // [node][player]
  std::vector<std::vector<long long>> minimum;    // [node][player]
  std::vector<int> priority;                      // [node]
};
EnergyProduct BuildEnergyProduct(const Arena& arena, const EnergySpec& spec,
                                 int max_nodes = kDefaultProductBound);

}  // namespace eqsynth

#endif  // EQSYNTH_ARENA_HPP_
