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
#include <set>

#include "doctest.h"
#include "eqsynth/arena.hpp"
#include "helpers.hpp"

namespace eqsynth {
namespace {

using testing::MakeArena;

bool HasIssue(const ArenaCheck& check, ErrorCode code) {
  return std::any_of(check.issues.begin(), check.issues.end(),
                     [&](const ArenaIssue& i) { return i.code == code; });
}

TEST_CASE("validate: minimal arena") {
  RawArena raw{{"A"}, {{"v", "A"}}, {{"v", "v"}}, "v"};
  auto check = ValidateArena(raw);
  REQUIRE(check.arena);
  CHECK(check.issues.empty());
  CHECK(check.arena->NumVertices() == 1);
  CHECK(check.arena->Successors(0) == std::vector<Vertex>{0});
}

TEST_CASE("validate: every problem is listed") {
  RawArena raw{{"A"},
               {{"u", "A"}, {"w", "A"}, {"y", "Z"}},
               {{"u", "x"}, {"u", "u"}, {"y", "y"}},
               "nowhere"};
  auto check = ValidateArena(raw);
  CHECK_FALSE(check.arena);
  CHECK(HasIssue(check, ErrorCode::kDeadEndVertex));
  CHECK(HasIssue(check, ErrorCode::kDanglingEdge));
  CHECK(HasIssue(check, ErrorCode::kUnknownOwner));
  CHECK(HasIssue(check, ErrorCode::kMissingStart));
  CHECK(check.issues.size() == 4);
}

TEST_CASE("validate: dead end alone") {
  RawArena raw{{"A"}, {{"u", "A"}, {"w", "A"}}, {{"u", "w"}}, "u"};
  auto check = ValidateArena(raw);
  REQUIRE(check.issues.size() == 1);
  CHECK(check.issues[0].code == ErrorCode::kDeadEndVertex);
  CHECK(check.issues[0].detail.find("'w'") != std::string::npos);
  try {
    BuildArena(raw);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDeadEndVertex);
  }
}

TEST_CASE("validate: duplicates") {
  RawArena raw{{"A", "A"}, {{"u", "A"}, {"u", "A"}}, {{"u", "u"}}, "u"};
  auto check = ValidateArena(raw);
  CHECK(HasIssue(check, ErrorCode::kDuplicateId));
}

TEST_CASE("successors sorted by identifier, duplicates merged") {
  Arena a = MakeArena({"A"}, {{"c", "A"}, {"b", "A"}, {"a", "A"}},
                      {{"c", "b"}, {"c", "a"}, {"c", "b"}, {"b", "b"}, {"a", "a"}});
  auto succ = a.Successors(a.IndexOf("c"));
  REQUIRE(succ.size() == 2);
  CHECK(a.Id(succ[0]) == "a");
  CHECK(a.Id(succ[1]) == "b");
}

TEST_CASE("dot export") {
  Arena a = MakeArena({"A", "B"}, {{"u", "A"}, {"w", "B"}}, {{"u", "w"}, {"w", "w"}});
  std::string dot = ToDot(a);
  CHECK(dot.find("label=\"u|A\"") != std::string::npos);
  CHECK(dot.find("label=\"w|B\"") != std::string::npos);
  CHECK(dot.find("\"u\" -> \"w\"") != std::string::npos);
  CHECK(dot.find("\"w\" -> \"w\"") != std::string::npos);
}

// Vertices recurring in a long prefix of stem . cycle^omega.
VertexSet SimulatedInf(const Lasso& l) {
  std::vector<Vertex> play = l.stem;
  for (int r = 0; r < 3; ++r) play.insert(play.end(), l.cycle.begin(), l.cycle.end());
  std::set<Vertex> late(play.end() - l.cycle.size(), play.end());
  return VertexSet(late.begin(), late.end());
}

TEST_CASE("inf_set") {
  CHECK(InfSet({{0}, {1}}) == VertexSet{1});
  CHECK(InfSet({{}, {0, 1}}) == VertexSet{0, 1});
  Lasso l{{0, 1, 0}, {0, 1}};
  CHECK(InfSet(l) == VertexSet{0, 1});
  CHECK(InfSet(l) == SimulatedInf(l));
}

TEST_CASE("normalize lasso") {
  CHECK(NormalizeLasso({{}, {3, 3}}) == Lasso{{}, {3}});
  CHECK(NormalizeLasso({{0, 1, 0}, {1, 0}}) == Lasso{{}, {0, 1}});
  CHECK(NormalizeLasso({{2}, {0, 1, 0, 1}}) == Lasso{{2}, {0, 1}});
}

// Closed walk inside S visiting all of S, found by search over
// (vertex, visited set) pairs.
bool ClosedWalkCovers(const Arena& a, const VertexSet& s) {
  std::uint32_t full = 0;
  for (Vertex v : s) full |= 1u << v;
  Vertex root = s.front();
  std::set<std::pair<Vertex, std::uint32_t>> seen;
  std::vector<std::pair<Vertex, std::uint32_t>> stack{{root, 1u << root}};
  while (!stack.empty()) {
    auto [v, mask] = stack.back();
    stack.pop_back();
    for (Vertex w : a.Successors(v)) {
      if (!(full >> w & 1)) continue;
      if (w == root && mask == full) return true;
      auto next = std::make_pair(w, mask | (1u << w));
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

std::vector<VertexSet> OracleFeasible(const Arena& a, Vertex from) {
  std::vector<char> reach(a.NumVertices(), 0);
  std::vector<Vertex> stack{from};
  reach[from] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : a.Successors(v))
      if (!reach[w]) reach[w] = 1, stack.push_back(w);
  }
  std::vector<VertexSet> out;
  for (std::uint32_t m = 1; m < (1u << a.NumVertices()); ++m) {
    VertexSet s;
    bool ok = true;
    for (Vertex v = 0; v < a.NumVertices(); ++v)
      if (m >> v & 1) s.push_back(v), ok = ok && reach[v];
    if (ok && ClosedWalkCovers(a, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST_CASE("feasible_inf_sets examples") {
  Arena single = MakeArena({"A"}, {{"v", "A"}}, {{"v", "v"}});
  CHECK(FeasibleInfSets(single, 0) == std::vector<VertexSet>{{0}});
  Arena uw = MakeArena({"A"}, {{"u", "A"}, {"w", "A"}}, {{"u", "u"}, {"u", "w"}, {"w", "w"}});
  CHECK(FeasibleInfSets(uw, 0) == std::vector<VertexSet>{{0}, {1}});
  CHECK(FeasibleInfSets(uw, 0) == OracleFeasible(uw, 0));
  Arena two = MakeArena({"A"}, {{"u", "A"}, {"w", "A"}}, {{"u", "w"}, {"w", "u"}});
  CHECK(FeasibleInfSets(two, 0) == std::vector<VertexSet>{{0, 1}});
  CHECK(FeasibleInfSets(two, 0) == OracleFeasible(two, 0));
}

TEST_CASE("feasible_inf_sets size guard") {
  std::mt19937_64 rng(1);
  Arena big = gen::RandomArena(rng, 21, 1);
  CHECK_THROWS_AS(FeasibleInfSets(big, 0), Error);
  CHECK_NOTHROW(FeasibleInfSets(big, 0, 21));
}

TEST_CASE("property: feasible_inf_sets agrees with closed-walk search") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Arena a = gen::RandomArena(rng, n, 2, 0.3);
    Vertex from = static_cast<Vertex>(rng() % n);
    CHECK(FeasibleInfSets(a, from) == OracleFeasible(a, from));
  }
}

TEST_CASE("induced_lasso examples") {
  Arena single = MakeArena({"A"}, {{"v", "A"}}, {{"v", "v"}});
  StrategyMachine trivial = StrategyMachine::Positional(0, {0});
  StrategyProfile p{{trivial}};
  CHECK(InducedLasso(single, p, 0) == Lasso{{}, {0}});

  Arena uw = MakeArena({"A"}, {{"u", "A"}, {"w", "A"}}, {{"u", "w"}, {"w", "w"}});
  StrategyProfile q{{StrategyMachine::Positional(0, {1, 1})}};
  CHECK(InducedLasso(uw, q, 0) == Lasso{{0}, {1}});

  // One memory bit flipping at every step; the product cycle has length 2.
  StrategyMachine flip(0, 1, 2);
  flip.SetControls(0, true);
  flip.SetChoice(0, 0, 0);
  flip.SetChoice(0, 1, 0);
  flip.SetUpdate(0, 0, 1);
  flip.SetUpdate(0, 1, 0);
  CHECK(flip.MemoryBits() == 1);
  StrategyProfile r{{flip}};
  CHECK(InducedLasso(single, r, 0) == Lasso{{}, {0}});
}

TEST_CASE("property: induced lasso is a feasible play within the step bound") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    int players = 1 + static_cast<int>(rng() % 3);
    Arena a = gen::RandomArena(rng, n, players);
    StrategyProfile p;
    long long product = n;
    for (Player pl = 0; pl < players; ++pl) {
      int states = 1 + static_cast<int>(rng() % 3);
      product *= states;
      p.machines.push_back(gen::RandomMachine(rng, a, pl, states));
    }
    Vertex from = static_cast<Vertex>(rng() % n);
    Lasso l = InducedLasso(a, p, from);
    CHECK(IsValidLasso(a, l, from));
    CHECK(static_cast<long long>(l.stem.size() + l.cycle.size()) <= product + 1);
    auto feasible = FeasibleInfSets(a, from);
    CHECK(std::binary_search(feasible.begin(), feasible.end(), InfSet(l)));
  }
}

TEST_CASE("property: minimization preserves behavior") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    Arena a = gen::RandomArena(rng, n, 2);
    StrategyMachine m0 = gen::RandomMachine(rng, a, 0, 1 + static_cast<int>(rng() % 4));
    StrategyMachine m1 = gen::RandomMachine(rng, a, 1, 1 + static_cast<int>(rng() % 4));
    StrategyMachine small = MinimizeMachine(m0);
    CHECK(small.NumStates() <= m0.NumStates());
    CHECK(small.IsValidFor(a));
    CHECK(MinimizeMachine(small) == small);
    for (Vertex v = 0; v < n; ++v) {
      StrategyProfile before{{m0, m1}}, after{{small, m1}};
      CHECK(InducedLasso(a, before, v) == InducedLasso(a, after, v));
    }
  }
}

TEST_CASE("machine validity") {
  Arena uw = MakeArena({"A"}, {{"u", "A"}, {"w", "A"}}, {{"u", "w"}, {"w", "w"}});
  StrategyMachine bad = StrategyMachine::Positional(0, {0, 1});  // u -> u is no edge
  CHECK_FALSE(bad.IsValidFor(uw));
  CHECK(StrategyMachine::Positional(0, {1, 1}).IsValidFor(uw));
  CHECK(ToDot(StrategyMachine::Positional(0, {1, 1}), uw).find("u / w") != std::string::npos);
}

TEST_CASE("fixed machines leave the other player free") {
  Arena a = MakeArena({"A", "B"}, {{"u", "A"}, {"w", "B"}, {"x", "B"}},
                      {{"u", "w"}, {"u", "x"}, {"w", "w"}, {"w", "u"}, {"x", "x"}});
  StrategyMachine ma = StrategyMachine::Positional(0, {1, -1, -1});
  const StrategyMachine fixed[] = {ma};
  ProductGraph product = FixMachines(a, fixed, 0);
  CHECK(product.size() == 2);  // x is never reached
  int from[] = {product.start};
  auto reach = graph::Reachable(product.graph, from);
  CHECK(FindCycleWithProjection(product, {0, 1}, reach));
  CHECK(FindCycleWithProjection(product, {1}, reach));
  CHECK_FALSE(FindCycleWithProjection(product, {2}, reach));
  auto nodes = *FindCycleWithProjection(product, {0, 1}, reach);
  Lasso l = ProjectLasso(product, LassoThrough(product, nodes));
  CHECK(InfSet(l) == VertexSet{0, 1});
  CHECK(IsValidLasso(a, l, 0));
}

TEST_CASE("energy clamping") {
  CHECK(ClampBudget(3, 5, {-2, 4}) == 4);
  CHECK(ClampBudget(0, -7, {-2, 4}) == -2);
  CHECK(ClampBudget(1, 1, {-2, 4}) == 2);
}

TEST_CASE("energy product: zero weights keep budgets at zero") {
  Arena a = MakeArena({"A"}, {{"u", "A"}, {"w", "A"}}, {{"u", "w"}, {"w", "u"}, {"w", "w"}});
  EnergySpec spec{{{0, 0}}, {{-3, 3}}, {0, 1}, {true}};
  EnergyProduct e = BuildEnergyProduct(a, spec);
  CHECK(e.arena.NumVertices() == 2);
  for (size_t i = 0; i < e.budget.size(); ++i) {
    CHECK(e.budget[i][0] == 0);
    CHECK(e.minimum[i][0] == 0);
  }
}

TEST_CASE("energy product: drop to the floor") {
  Arena a = MakeArena({"A"}, {{"u", "A"}}, {{"u", "u"}});
  EnergySpec spec{{{-7}}, {{-2, 4}}, {0}, {true}};
  EnergyProduct e = BuildEnergyProduct(a, spec);
  REQUIRE(e.arena.NumVertices() == 1);
  CHECK(e.budget[0][0] == -2);
  CHECK(e.minimum[0][0] == -2);
}

TEST_CASE("property: energy budgets stay in caps and minima never increase") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    int players = 1 + static_cast<int>(rng() % 2);
    Arena a = gen::RandomArena(rng, n, players);
    EnergySpec spec;
    for (int p = 0; p < players; ++p) {
      std::vector<long long> w;
      for (int v = 0; v < n; ++v) w.push_back(static_cast<long long>(rng() % 7) - 3);
      spec.weight.push_back(w);
      long long lo = -static_cast<long long>(rng() % 4), hi = static_cast<long long>(rng() % 4);
      spec.caps.push_back({lo, hi});
      spec.wants_even.push_back(true);
    }
    for (int v = 0; v < n; ++v) spec.priority.push_back(static_cast<int>(rng() % 3));
    EnergyProduct e = BuildEnergyProduct(a, spec);
    for (Vertex node = 0; node < e.arena.NumVertices(); ++node) {
      for (int p = 0; p < players; ++p) {
        CHECK(e.budget[node][p] >= spec.caps[p].first);
        CHECK(e.budget[node][p] <= spec.caps[p].second);
        CHECK(e.minimum[node][p] <= e.budget[node][p]);
        CHECK(e.minimum[node][p] <= 0);
        for (Vertex next : e.arena.Successors(node)) {
          CHECK(e.minimum[next][p] <= e.minimum[node][p]);
          CHECK(e.budget[next][p] ==
                ClampBudget(e.budget[node][p], spec.weight[p][e.base[next]], spec.caps[p]));
        }
      }
      CHECK(e.arena.Owner(node) == a.Owner(e.base[node]));
    }
  }
}

}  // namespace
}  // namespace eqsynth
