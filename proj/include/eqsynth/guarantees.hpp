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


#ifndef EQSYNTH_GUARANTEES_HPP_
#define EQSYNTH_GUARANTEES_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eqsynth/arena.hpp"
#include "eqsynth/orders.hpp"
#include "eqsynth/winlose.hpp"

namespace eqsynth {

// Outcome of a play as a function of its inf-set. Two shapes:
//  * explicit: a table from vertex sets to outcomes, with an optional
//    fallback for sets not listed;
//  * labeled: every vertex carries a label and a priority, the label is
//    constant on every inf-set, and the outcome depends on the label and
//    the least priority of the inf-set. Energy products have this shape.
class OutcomeMap {
 public:
  OutcomeMap() = default;
  static OutcomeMap Explicit(std::map<VertexSet, Outcome> table,
                             std::optional<Outcome> fallback = std::nullopt);
  static OutcomeMap Labeled(std::vector<int> label, std::vector<int> priority,
                            std::map<std::pair<int, int>, Outcome> table);

  bool IsExplicit() const { return explicit_; }
  std::optional<Outcome> Find(const VertexSet& inf) const;
  // Throws kInvalidInput when undefined.
  Outcome Of(const VertexSet& inf) const;

  const std::map<VertexSet, Outcome>& table() const { return table_; }
  const std::optional<Outcome>& fallback() const { return fallback_; }
  const std::vector<int>& label() const { return label_; }
  const std::vector<int>& priority() const { return priority_; }
  const std::map<std::pair<int, int>, Outcome>& labeled_table() const { return labeled_; }

 private:
  bool explicit_ = true;
  std::map<VertexSet, Outcome> table_;
  std::optional<Outcome> fallback_;
  std::vector<int> label_;
  std::vector<int> priority_;
  std::map<std::pair<int, int>, Outcome> labeled_;
};

// A multi-player game on an arena with prefix-independent preferences.
struct GraphGame {
  Arena arena;
  OutcomeMap outcomes;
  PreferenceProfile prefs;

  Outcome OutcomeOf(const Lasso& lasso) const { return outcomes.Of(InfSet(lasso)); }
  const StrictWeakOrder& Order(Player p) const { return prefs.orders[p]; }
};

// Checks players and outcomes against the arena and that every feasible
// inf-set has an outcome. Throws kInvalidInput.
void ValidateGraphGame(const GraphGame& game);

// Outcomes of the plays starting at `from`, sorted by index.
std::vector<Outcome> RealizableOutcomes(const GraphGame& game, Vertex from);

// One realizable outcome of a product whose nodes project onto the game's
// arena, with a strongly connected node set whose covering walk yields it.
struct ProductPlay {
  Outcome outcome;
  std::vector<int> nodes;
};
// Every outcome of the plays from product.start, one witness each, sorted
// by outcome.
std::vector<ProductPlay> ProductPlays(const GraphGame& game, const ProductGraph& product);

// Player `a` against the coalition of everybody else; side 0 wins iff the
// outcome is strictly better for `a` than `o`.
WinLoseGame ThresholdGame(const GraphGame& game, Player a, Outcome o);
// Same with the threshold given as a class rank of `a`.
WinLoseGame ThresholdGameAtRank(const GraphGame& game, Player a, int rank);

// Best guarantee of one player. value[v] is the rank of the least class of
// the best guarantee at v: `a` can force rank >= value[v] from v, and the
// others can hold her to rank <= value[v].
struct PlayerGuarantee {
  std::vector<int> value;              // [vertex]
  std::vector<SolveResult> threshold;  // [rank j]: game "rank > j", j < top
  int memory_bits = 0;                 // largest memory of any threshold machine
};
PlayerGuarantee BestGuarantee(const GraphGame& game, Player a);

struct GuaranteeTable {
  std::vector<PlayerGuarantee> players;
  int n = 0;  // pieces, one per vertex
  int K = 0;  // bits of the piece automaton
  int m = 0;  // memory of the threshold machines

  // Least-index outcome of the guaranteed class.
  Outcome Representative(const GraphGame& game, Player a, Vertex v) const;
};
GuaranteeTable ComputeGuarantees(const GraphGame& game);

// A machine of `a` that, after any history ending in v, secures Γ_a(v).
// State (j, q): running the winning machine of threshold j in state q;
// active[state] is j, or -1 for the trivial machine used where nothing
// beyond the worst class can be forced.
struct OptimalStrategy {
  StrategyMachine machine;
  std::vector<int> active;
};
OptimalStrategy BuildOptimalStrategy(const GraphGame& game, Player a, const PlayerGuarantee& g);
OptimalStrategy BuildOptimalStrategy(const GraphGame& game, Player a);

// Coalition machine holding b to ranks <= value_b(v) from v, with that rank.
// The machine controls every vertex not owned by b.
struct Punishment {
  StrategyMachine machine;
  int rank = 0;
};
Punishment PunishmentStrategy(const GraphGame& game, Player b, Vertex v, const PlayerGuarantee& g);
Punishment PunishmentStrategy(const GraphGame& game, Player b, Vertex v);

// Worst rank for `a` among plays from `from` that conform to `machine`.
int WorstRankAgainst(const GraphGame& game, Player a, const StrategyMachine& machine,
                     Vertex from);

// Energy-parity game as a labeled game over the energy product. Outcomes are
// (least priority, minimum budgets); a player ranks them by its own minimum
// budget first and by parity second.
struct EnergyGame {
  EnergyProduct product;
  GraphGame game;
  EnergySpec spec;
};
EnergyGame MakeEnergyGame(const Arena& arena, const EnergySpec& spec,
                          int max_nodes = kDefaultProductBound);

}  // namespace eqsynth

#endif  // EQSYNTH_GUARANTEES_HPP_
