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


#ifndef EQSYNTH_WINLOSE_HPP_
#define EQSYNTH_WINLOSE_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "eqsynth/arena.hpp"

namespace eqsynth {

struct Reachability {
  VertexSet target;
};
struct Safety {
  VertexSet safe;
};
// Side 0 wins iff the least priority seen infinitely often is even.
struct Parity {
  std::vector<int> priority;  // [vertex]
};
// Side 0 wins iff the set of vertices seen infinitely often is in `family`.
struct Muller {
  std::vector<VertexSet> family;
};
using Objective = std::variant<Reachability, Safety, Parity, Muller>;

// Two-sided game on an arena. Side 0 (the protagonist) moves at vertices
// with side0[v] set, side 1 everywhere else.
struct WinLoseGame {
  Arena arena;
  std::vector<char> side0;
  Objective objective;

  // Protagonist owns exactly the vertices of `player`.
  static WinLoseGame ForPlayer(const Arena& arena, Player player, Objective objective);
  int Side(Vertex v) const { return side0[v] ? 0 : 1; }
};

// Throws kInvalidInput when the objective does not fit the arena.
void ValidateGame(const WinLoseGame& game);

// Whether the ultimately periodic play described by `lasso` is won by side 0.
bool Side0WinsPlay(const WinLoseGame& game, const Lasso& lasso);

struct SolveResult {
  VertexSet win0;
  VertexSet win1;
  // strategyN (machine player N) wins from every vertex of winN.
  StrategyMachine strategy0;
  StrategyMachine strategy1;
  int memory_bits_used = 0;
};

struct AttractorResult {
  VertexSet region;
  StrategyMachine strategy;  // controls the side's vertices in the region
};
// Vertices from which `side` can force a visit to `target`. The machine moves
// to a successor of strictly lower attractor level; outside the region it
// picks the first successor.
AttractorResult Attractor(const WinLoseGame& game, int side, const VertexSet& target);

SolveResult SolveParity(const WinLoseGame& game);
SolveResult SolveMuller(const WinLoseGame& game, int max_nodes = kDefaultProductBound);
SolveResult SolveReachability(const WinLoseGame& game);
SolveResult SolveSafety(const WinLoseGame& game);
// Dispatches on the objective.
SolveResult Solve(const WinLoseGame& game, int max_nodes = kDefaultProductBound);

// Exhaustive oracle over machines with at most 2^bits states.
struct BruteForceResult {
  VertexSet win0;
  VertexSet win1;
  VertexSet not_determined;  // NotDeterminedAtBound
  // A winning machine per vertex, when one exists.
  std::vector<std::optional<StrategyMachine>> witness0;
  std::vector<std::optional<StrategyMachine>> witness1;
};
inline constexpr long long kDefaultMachineCap = 2000000;
// Throws kCapExceeded if a side has more than `cap` machines.
BruteForceResult BruteForceSolve(const WinLoseGame& game, int bits,
                                 long long cap = kDefaultMachineCap);

// Whether `machine`, playing `side`, wins from `from` against every opposing
// strategy (not just finite-memory ones).
bool MachineWins(const WinLoseGame& game, int side, const StrategyMachine& machine, Vertex from);

// A play from `from`, consistent with `machine`, that `side` loses; none if
// the machine wins from `from`.
std::optional<Lasso> LosingPlay(const WinLoseGame& game, int side, const StrategyMachine& machine,
                                Vertex from);

// Generic parity solving on an explicit graph; exposed for product games.
struct ParityGraph {
  graph::Digraph graph;
  std::vector<int> side;      // 0 or 1 per node
  std::vector<int> priority;  // min-parity
};
struct ParitySolution {
  graph::Mask win0;
  // Positional choice per node for the node's owner (-1 if none needed).
  std::vector<int> choice;
};
ParitySolution SolveParityGraph(const ParityGraph& game);

}  // namespace eqsynth

#endif  // EQSYNTH_WINLOSE_HPP_
