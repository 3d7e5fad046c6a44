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


#include <algorithm>
#include <random>

#include "doctest.h"
#include "eqsynth/guarantees.hpp"
#include "helpers.hpp"

namespace eqsynth {
namespace {

using testing::MakeArena;

PreferenceProfile Prefs(std::vector<std::string> players, std::vector<std::string> outcomes,
                        std::vector<std::vector<std::vector<Outcome>>> groups) {
  PreferenceProfile p{players, outcomes, {}};
  for (auto& g : groups) p.orders.push_back(StrictWeakOrder::FromGroups(outcomes.size(), g));
  return p;
}

// u -> u, u -> w, w -> w with {u} -> o1, {w} -> o2 and o1 < o2 for A.
GraphGame Escape(const std::string& owner_of_u) {
  Arena a = MakeArena({"A", "B"}, {{"u", owner_of_u}, {"w", "A"}},
                      {{"u", "u"}, {"u", "w"}, {"w", "w"}});
  auto map = OutcomeMap::Explicit({{{0}, 0}, {{1}, 1}});
  return GraphGame{a, map, Prefs({"A", "B"}, {"o1", "o2"}, {{{0}, {1}}, {{0, 1}}})};
}

// Best rank `a` can force with machines of up to two states.
int BruteGuarantee(const GraphGame& g, Player a, Vertex v) {
  int best = 0;
  for (int states = 1; states <= 2; ++states)
    testing::ForEachMachine(g.arena, a, states, [&](const StrategyMachine& m) {
      best = std::max(best, WorstRankAgainst(g, a, m, v));
    });
  return best;
}

TEST_CASE("outcome maps") {
  auto map = OutcomeMap::Explicit({{{1, 0}, 2}}, 5);
  CHECK(map.Of({0, 1}) == 2);
  CHECK(map.Of({1}) == 5);
  CHECK_THROWS_AS(OutcomeMap::Explicit({}).Of({0}), Error);
  auto labeled = OutcomeMap::Labeled({0, 0, 1}, {1, 2, 0}, {{{0, 1}, 7}, {{0, 2}, 8}});
  CHECK(labeled.Of({0, 1}) == 7);
  CHECK(labeled.Of({1}) == 8);
  CHECK_FALSE(labeled.Find({1, 2}));  // mixed labels
  CHECK_FALSE(labeled.Find({2}));
}

TEST_CASE("game validation") {
  GraphGame g = Escape("A");
  CHECK_NOTHROW(ValidateGraphGame(g));
  GraphGame missing = g;
  missing.outcomes = OutcomeMap::Explicit({{{0}, 0}});
  CHECK_THROWS_AS(ValidateGraphGame(missing), Error);
  GraphGame few = g;
  few.prefs.orders.pop_back();
  CHECK_THROWS_AS(ValidateGraphGame(few), Error);
}

TEST_CASE("threshold game examples") {
  GraphGame g = Escape("A");
  auto top = ThresholdGame(g, 0, 1);
  CHECK(std::get<Muller>(top.objective).family.empty());
  auto low = ThresholdGame(g, 0, 0);
  CHECK(std::get<Muller>(low.objective).family == std::vector<VertexSet>{{1}});
  CHECK(Solve(low).win0 == VertexSet{0, 1});
  GraphGame h = Escape("B");
  // The coalition keeps the play at u; only w itself is won.
  CHECK(Solve(ThresholdGame(h, 0, 0)).win0 == VertexSet{1});
}

TEST_CASE("best guarantee examples") {
  Arena single = MakeArena({"A"}, {{"v", "A"}}, {{"v", "v"}});
  GraphGame s{single, OutcomeMap::Explicit({{{0}, 1}}), Prefs({"A"}, {"x", "y"}, {{{0}, {1}}})};
  CHECK(BestGuarantee(s, 0).value == std::vector<int>{1});

  GraphGame g = Escape("A");
  PlayerGuarantee ga = BestGuarantee(g, 0);
  CHECK(ga.value[0] == 1);
  CHECK(ga.value[0] == BruteGuarantee(g, 0, 0));
  GraphGame h = Escape("B");
  PlayerGuarantee ha = BestGuarantee(h, 0);
  CHECK(ha.value[0] == 0);
  CHECK(ha.value[0] == BruteGuarantee(h, 0, 0));
  GuaranteeTable t = ComputeGuarantees(h);
  CHECK(t.Representative(h, 0, 0) == 0);
  CHECK(t.Representative(h, 0, 1) == 1);
  CHECK(t.n == 2);
  CHECK(t.K == 0);
}

TEST_CASE("optimal strategy examples") {
  GraphGame g = Escape("A");
  OptimalStrategy s = BuildOptimalStrategy(g, 0);
  CHECK(s.machine.Choice(0, 0) == 1);
  StrategyProfile p{{s.machine, StrategyMachine::Positional(1, {-1, -1})}};
  CHECK(InducedLasso(g.arena, p, 0) == Lasso{{0}, {1}});

  Arena single = MakeArena({"A"}, {{"v", "A"}}, {{"v", "v"}});
  GraphGame t{single, OutcomeMap::Explicit({{{0}, 0}}), Prefs({"A"}, {"x"}, {{{0}}})};
  OptimalStrategy trivial = BuildOptimalStrategy(t, 0);
  CHECK(trivial.machine.MemoryBits() == 0);
}

TEST_CASE("punishment examples") {
  Arena a = MakeArena({"A", "B"}, {{"u", "B"}, {"w", "B"}}, {{"u", "u"}, {"u", "w"}, {"w", "w"}});
  GraphGame g{a, OutcomeMap::Explicit({{{0}, 0}, {{1}, 1}}),
              Prefs({"A", "B"}, {"o1", "o2"}, {{{0}, {1}}, {{0}, {1}}})};
  Punishment p = PunishmentStrategy(g, 0, 0);
  CHECK(p.rank == 0);
  CHECK(p.machine.Choice(0, 0) == 0);
  Arena single = MakeArena({"A"}, {{"v", "A"}}, {{"v", "v"}});
  GraphGame s{single, OutcomeMap::Explicit({{{0}, 0}}), Prefs({"A"}, {"x"}, {{{0}}})};
  CHECK(PunishmentStrategy(s, 0, 0).machine.NumStates() == 1);
}

// Best rank b reaches against a coalition machine.
int BestRankAgainst(const GraphGame& g, Player b, const StrategyMachine& coalition, Vertex v) {
  const StrategyMachine fixed[] = {coalition};
  int best = -1;
  for (const auto& play : ProductPlays(g, FixMachines(g.arena, fixed, v)))
    best = std::max(best, g.Order(b).Rank(play.outcome));
  return best;
}

void CheckLocalConsistency(const GraphGame& g, const GuaranteeTable& t) {
  for (Player a = 0; a < g.arena.NumPlayers(); ++a) {
    const auto& value = t.players[a].value;
    for (Vertex v = 0; v < g.arena.NumVertices(); ++v) {
      int best = -1, worst = 1 << 30;
      for (Vertex w : g.arena.Successors(v)) {
        best = std::max(best, value[w]);
        worst = std::min(worst, value[w]);
      }
      CHECK(value[v] == (g.arena.Owner(v) == a ? best : worst));
    }
  }
}

TEST_CASE("property: guarantees are consistent, achieved and never beaten") {
  gen::Rng rng(31);
  gen::GameShape shape{4, 3, 4, false};
  for (int trial = 0; trial < 150; ++trial) {
    GraphGame g = gen::RandomGraphGame(rng, shape);
    ValidateGraphGame(g);
    GuaranteeTable t = ComputeGuarantees(g);
    CheckLocalConsistency(g, t);
    for (Player a = 0; a < g.arena.NumPlayers(); ++a) {
      const PlayerGuarantee& pg = t.players[a];
      OptimalStrategy opt = BuildOptimalStrategy(g, a, pg);
      CHECK(opt.machine.IsValidFor(g.arena));
      int bound = t.m + (t.n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(t.n - 1))) + t.K;
      CHECK(opt.machine.MemoryBits() <= bound);
      for (Vertex v = 0; v < g.arena.NumVertices(); ++v) {
        CHECK(WorstRankAgainst(g, a, opt.machine, v) == pg.value[v]);
        Punishment pun = PunishmentStrategy(g, a, v, pg);
        CHECK(pun.machine.NumStates() <= (1 << t.m));
        CHECK(BestRankAgainst(g, a, pun.machine, v) <= pun.rank);
        if (g.arena.NumVertices() <= 3) CHECK(BruteGuarantee(g, a, v) <= pg.value[v]);
      }
      // After any history, the continuation secures the local guarantee.
      for (auto [v, q] : testing::FreeStates(g.arena, opt.machine, g.arena.Start())) {
        const StrategyMachine fixed[] = {opt.machine};
        std::vector<int> memory{q};
        ProductGraph product = FixMachines(g.arena, fixed, v, nullptr, kDefaultProductBound,
                                           &memory);
        for (const auto& play : ProductPlays(g, product))
          CHECK(g.Order(a).Rank(play.outcome) >= pg.value[v]);
      }
    }
  }
}

TEST_CASE("property: switches only move up along conforming plays") {
  gen::Rng rng(32);
  gen::GameShape shape{5, 3, 4, false};
  for (int trial = 0; trial < 100; ++trial) {
    GraphGame g = gen::RandomGraphGame(rng, shape);
    for (Player a = 0; a < g.arena.NumPlayers(); ++a) {
      OptimalStrategy opt = BuildOptimalStrategy(g, a);
      const StrategyMachine fixed[] = {opt.machine};
      for (Vertex from = 0; from < g.arena.NumVertices(); ++from) {
        std::vector<std::vector<int>> states;
        ProductGraph product = FixMachines(g.arena, fixed, from, &states);
        // Active machine after reading each node.
        std::vector<int> active(product.size());
        for (int node = 0; node < product.size(); ++node)
          active[node] = opt.active[opt.machine.Update(product.projection[node], states[node][0])];
        std::set<int> distinct(active.begin(), active.end());
        CHECK(static_cast<int>(distinct.size()) <= g.arena.NumVertices());
        for (int node = 0; node < product.size(); ++node)
          for (int next : product.graph.succ[node]) CHECK(active[next] >= active[node]);
      }
    }
  }
}

TEST_CASE("energy game guarantees") {
  Arena a = MakeArena({"A", "B"}, {{"u", "A"}, {"w", "B"}},
                      {{"u", "u"}, {"u", "w"}, {"w", "w"}, {"w", "u"}});
  EnergySpec spec{{{-1, 1}, {1, -1}}, {{-2, 2}, {-2, 2}}, {1, 0}, {true, true}};
  EnergyGame e = MakeEnergyGame(a, spec);
  CHECK_NOTHROW(ValidateGraphGame(e.game));
  GuaranteeTable t = ComputeGuarantees(e.game);
  CheckLocalConsistency(e.game, t);
  CHECK(t.m == 0);
}

TEST_CASE("property: energy guarantees are locally consistent") {
  gen::Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    int n = gen::Uniform(rng, 1, 4);
    Arena a = gen::RandomArena(rng, n, gen::Uniform(rng, 1, 2));
    EnergyGame e = MakeEnergyGame(a, gen::RandomEnergySpec(rng, a));
    ValidateGraphGame(e.game);
    GuaranteeTable t = ComputeGuarantees(e.game);
    CheckLocalConsistency(e.game, t);
    for (Player p = 0; p < a.NumPlayers(); ++p) {
      OptimalStrategy opt = BuildOptimalStrategy(e.game, p, t.players[p]);
      for (Vertex v = 0; v < e.game.arena.NumVertices(); ++v)
        CHECK(WorstRankAgainst(e.game, p, opt.machine, v) == t.players[p].value[v]);
    }
  }
}

}  // namespace
}  // namespace eqsynth
