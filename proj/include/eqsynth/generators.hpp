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


#ifndef EQSYNTH_GENERATORS_HPP_
#define EQSYNTH_GENERATORS_HPP_

// Seeded random instances for property checks and the acceptance suite.

#include <random>

#include "eqsynth/arena.hpp"
#include "eqsynth/extensive.hpp"
#include "eqsynth/guarantees.hpp"
#include "eqsynth/orders.hpp"
#include "eqsynth/winlose.hpp"

namespace eqsynth::gen {

using Rng = std::mt19937_64;

int Uniform(Rng& rng, int lo, int hi);  // inclusive

// Vertices v0..v{n-1}, players A, B, ...; every vertex keeps a successor.
Arena RandomArena(Rng& rng, int n, int players, double density = 0.4);

// Controls exactly the vertices of `player`.
StrategyMachine RandomMachine(Rng& rng, const Arena& arena, Player player, int states);

StrictWeakOrder RandomOrder(Rng& rng, int outcomes);
StrictWeakOrder RandomLinearOrder(Rng& rng, int outcomes);

// Parity with priorities below `priorities`, or Muller over random subsets.
WinLoseGame RandomParityGame(Rng& rng, int max_vertices, int priorities);
WinLoseGame RandomMullerGame(Rng& rng, int max_vertices);

struct GameShape {
  int max_vertices = 4;
  int max_players = 3;
  int max_outcomes = 4;
  bool linear = false;
  int min_players = 1;
};
// Explicit outcome map over every feasible inf-set.
GraphGame RandomGraphGame(Rng& rng, const GameShape& shape);

EnergySpec RandomEnergySpec(Rng& rng, const Arena& arena, int max_weight = 3, int max_cap = 3);

// Internal nodes have 1..max_children children; leaves appear at random and
// always at max_depth. Payoffs are multiples of 1/denominator in [0,1].
TreeGame RandomPayoffTree(Rng& rng, int max_depth, int players, int max_children = 3,
                          int denominator = 12);
// Same shape with outcome leaves and random strict weak orders.
TreeGame RandomOutcomeTree(Rng& rng, int max_depth, int players, int outcomes,
                           int max_children = 3);

}  // namespace eqsynth::gen

#endif  // EQSYNTH_GENERATORS_HPP_
