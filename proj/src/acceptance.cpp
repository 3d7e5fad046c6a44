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


#include "eqsynth/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

#include "eqsynth/equilibria.hpp"
#include "eqsynth/extensive.hpp"
#include "eqsynth/generators.hpp"
#include "eqsynth/guarantees.hpp"
#include "eqsynth/winlose.hpp"

namespace eqsynth::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
  long long checked = 0;
  long long violations = 0;
  std::string first_failure;

  void Fail(const std::string& what) {
    if (violations++ == 0) first_failure = what;
  }
  std::string Summary(const std::string& unit) const {
    std::string s = std::to_string(checked) + " " + unit + ", " + std::to_string(violations) +
                    " violations";
    if (violations) s += " (first: " + first_failure + ")";
    return s;
  }
};

int CeilLog2(int n) {
  int bits = 0;
  while ((1 << bits) < n) ++bits;
  return bits;
}

bool Partitions(const WinLoseGame& g, const VertexSet& win0, const VertexSet& win1) {
  std::vector<int> seen(g.arena.NumVertices(), 0);
  for (Vertex v : win0) ++seen[v];
  for (Vertex v : win1) ++seen[v];
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

// 1. Win/lose regions cover the arena without overlap, and each side's
// machine wins where claimed.
CriterionResult Determinacy(std::uint64_t seed) {
  CriterionResult r{1, "determinacy partition", false, "", 0};
  gen::Rng rng(seed + 1);
  Tally t;
  const auto start = Clock::now();
  for (int i = 0; i < 5000; ++i) {
    WinLoseGame g = i % 2 == 0 ? gen::RandomParityGame(rng, 5, 3) : gen::RandomMullerGame(rng, 3);
    SolveResult s = Solve(g);
    ++t.checked;
    if (!Partitions(g, s.win0, s.win1)) {
      t.Fail("game " + std::to_string(i) + " regions do not partition V");
      continue;
    }
    for (Vertex v : s.win0)
      if (!MachineWins(g, 0, s.strategy0, v)) t.Fail("game " + std::to_string(i) + " side 0 loses");
    for (Vertex v : s.win1)
      if (!MachineWins(g, 1, s.strategy1, v)) t.Fail("game " + std::to_string(i) + " side 1 loses");
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = t.violations == 0 && r.seconds < 60;
  r.detail = t.Summary("games") + (r.seconds < 60 ? "" : ", over the 60s budget");
  return r;
}

// Every 4-vertex labeled arena up to isomorphism: 16 edge bits, 4 side bits,
// 4 priority bits. Dead ends are skipped.
struct SmallParity {
  int n;
  std::uint32_t code;
};

std::uint32_t Permute(int n, std::uint32_t code, const std::array<int, 4>& p) {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (code >> (i * n + j) & 1) out |= 1u << (p[i] * n + p[j]);
  const int base = n * n;
  for (int i = 0; i < n; ++i) {
    if (code >> (base + i) & 1) out |= 1u << (base + p[i]);
    if (code >> (base + n + i) & 1) out |= 1u << (base + n + p[i]);
  }
  return out;
}

bool IsCanonical(int n, std::uint32_t code, const std::vector<std::array<int, 4>>& perms) {
  for (const auto& p : perms)
    if (Permute(n, code, p) < code) return false;
  return true;
}

WinLoseGame Decode(int n, std::uint32_t code) {
  RawArena raw;
  raw.players = {"S0", "S1"};
  Parity par;
  for (int i = 0; i < n; ++i) {
    raw.vertices.push_back({"v" + std::to_string(i), (code >> (n * n + i) & 1) ? "S1" : "S0"});
    par.priority.push_back(code >> (n * n + n + i) & 1);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (code >> (i * n + j) & 1) raw.edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(j));
  raw.start = "v0";
  return WinLoseGame::ForPlayer(BuildArena(raw), 0, par);
}

bool NoDeadEnd(int n, std::uint32_t code) {
  for (int i = 0; i < n; ++i)
    if ((code >> (i * n) & ((1u << n) - 1)) == 0) return false;
  return true;
}

bool SameRegions(const SolveResult& s, const BruteForceResult& b) {
  return b.not_determined.empty() && s.win0 == b.win0 && s.win1 == b.win1;
}

// 2. Parity against positional brute force on every small arena, Muller
// against brute force at the reported memory.
CriterionResult SolverOracle(std::uint64_t seed) {
  CriterionResult r{2, "solver-oracle agreement", false, "", 0};
  const auto start = Clock::now();
  Tally parity;
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      if (std::all_of(p.begin() + n, p.end(), [&](int x) { return x >= n; }) &&
          !std::is_sorted(p.begin(), p.begin() + n))
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::uint32_t limit = 1u << (n * n + 2 * n);
    for (std::uint32_t code = 0; code < limit; ++code) {
      if (!NoDeadEnd(n, code) || !IsCanonical(n, code, perms)) continue;
      WinLoseGame g = Decode(n, code);
      ++parity.checked;
      if (!SameRegions(SolveParity(g), BruteForceSolve(g, 0)))
        parity.Fail("n=" + std::to_string(n) + " code " + std::to_string(code));
    }
  }
  gen::Rng rng(seed + 2);
  Tally muller;
  long long skipped = 0;
  for (int attempt = 0; attempt < 20000 && muller.checked < 250; ++attempt) {
    WinLoseGame g = gen::RandomMullerGame(rng, 3);
    SolveResult s = SolveMuller(g);
    BruteForceResult b;
    try {
      b = BruteForceSolve(g, s.memory_bits_used);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCapExceeded) throw;
      ++skipped;
      continue;
    }
    ++muller.checked;
    if (!SameRegions(s, b)) muller.Fail("muller attempt " + std::to_string(attempt));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = parity.violations == 0 && muller.violations == 0 && muller.checked >= 200;
  r.detail = "parity: " + parity.Summary("non-isomorphic arenas") + "; muller: " +
             muller.Summary("instances") + ", " + std::to_string(skipped) +
             " skipped over the machine cap";
  return r;
}

// 3. Synthesized equilibria survive exhaustive deviation checks and respect
// the memory bound.
CriterionResult NeSoundness(std::uint64_t seed) {
  CriterionResult r{3, "NE synthesis soundness", false, "", 0};
  gen::Rng rng(seed + 3);
  Tally t;
  int nontrivial = 0;
  const auto start = Clock::now();
  for (int i = 0; i < 5000; ++i) {
    GraphGame g = gen::RandomGraphGame(rng, gen::GameShape{4, 3, 4, false, 2});
    SynthesisReport rep = SynthesizeNe(g);
    ++t.checked;
    if (g.arena.NumPlayers() > 1 && RealizableOutcomes(g, g.arena.Start()).size() > 1) ++nontrivial;
    const std::string id = "game " + std::to_string(i);
    if (VerifyNe(g, rep.profile)) t.Fail(id + " has a profitable deviation");
    GuaranteeTable table = ComputeGuarantees(g);
    const int players = g.arena.NumPlayers();
    const int bound = players * (table.m + CeilLog2(g.arena.NumVertices()) + 0) + 1;
    for (int p = 0; p < players; ++p)
      if (rep.profile.machines[p].MemoryBits() > bound)
        t.Fail(id + " player " + std::to_string(p) + " exceeds the memory bound");
    if (g.OutcomeOf(InducedLasso(g.arena, rep.profile, g.arena.Start())) != rep.outcome)
      t.Fail(id + " reports the wrong outcome");
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = t.violations == 0 && r.seconds < 300;
  r.detail = t.Summary("games") + " (" + std::to_string(nontrivial) +
             " with several outcomes)" +
             (r.seconds < 300 ? "" : ", over the 300s budget");
  return r;
}

// 4. Two players with inverse preferences: the optimal pair is subgame
// perfect and the guarantees meet everywhere.
CriterionResult AntagonisticSpe(std::uint64_t seed) {
  CriterionResult r{4, "antagonistic SPE", false, "", 0};
  gen::Rng rng(seed + 4);
  Tally t;
  int nontrivial = 0;
  const auto start = Clock::now();
  for (int i = 0; i < 2000; ++i) {
    GraphGame g = gen::RandomGraphGame(rng, gen::GameShape{4, 2, 4, false, 2});
    g.prefs.orders[1] = g.prefs.orders[0].Inverse();
    StrategyProfile profile = SynthesizeAntagonisticSpe(g);
    ++t.checked;
    if (RealizableOutcomes(g, g.arena.Start()).size() > 1) ++nontrivial;
    const std::string id = "game " + std::to_string(i);
    if (VerifySpe(g, profile)) t.Fail(id + " is not subgame perfect");
    GuaranteeTable table = ComputeGuarantees(g);
    // Least class of a's guarantee, read in b's order, is b's top guarantee class.
    const int top = g.prefs.orders[0].NumClasses() - 1;
    for (Vertex v = 0; v < g.arena.NumVertices(); ++v)
      if (table.players[0].value[v] != top - table.players[1].value[v])
        t.Fail(id + " guarantees differ at " + g.arena.Id(v));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = t.violations == 0;
  r.detail = t.Summary("games") + " (" + std::to_string(nontrivial) + " with several outcomes)";
  return r;
}

// 5. Three-leaf template over all pairs of linear orders on three outcomes.
CriterionResult ParetoBiconditional(std::uint64_t) {
  CriterionResult r{5, "Pareto biconditional", false, "", 0};
  const auto start = Clock::now();
  Tally t;
  std::vector<int> pa{0, 1, 2};
  do {
    std::vector<int> pb{0, 1, 2};
    do {
      PreferenceProfile prefs{{"a", "b"}, {"x", "y", "z"}, {StrictWeakOrder(pa), StrictWeakOrder(pb)}};
      ++t.checked;
      const bool pattern = FindForbiddenPattern(prefs).has_value();
      if (TemplateHasParetoNe(prefs) == pattern) t.Fail("biconditional fails for a profile pair");
    } while (std::next_permutation(pb.begin(), pb.end()));
  } while (std::next_permutation(pa.begin(), pa.end()));
  // z <_a y <_a x and x <_b z <_b y, b at the root.
  PreferenceProfile counter{{"a", "b"}, {"x", "y", "z"},
                            {StrictWeakOrder(std::vector<int>{2, 1, 0}),
                             StrictWeakOrder(std::vector<int>{0, 2, 1})}};
  auto ne = EnumerateNeOutcomes(ThreeLeafGame(counter, 1, 0, 1, 2));
  if (ne != std::vector<Outcome>{2}) t.Fail("counterexample NE set is not {z}");
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = t.violations == 0 && t.checked == 36;
  r.detail = t.Summary("profile pairs") + "; counterexample NE outcomes {z}";
  return r;
}

// 6. Pareto-optimal NE on pattern-free linear Muller games.
CriterionResult MullerPareto(std::uint64_t seed) {
  CriterionResult r{6, "Muller Pareto NE", false, "", 0};
  gen::Rng rng(seed + 6);
  Tally t;
  int nontrivial = 0;
  const auto start = Clock::now();
  for (int attempt = 0; attempt < 100000 && t.checked < 2000; ++attempt) {
    GraphGame g = gen::RandomGraphGame(rng, gen::GameShape{4, 3, 4, true, 2});
    if (FindForbiddenPattern(g.prefs)) continue;
    ++t.checked;
    if (RealizableOutcomes(g, g.arena.Start()).size() > 1) ++nontrivial;
    const std::string id = "attempt " + std::to_string(attempt);
    try {
      SynthesisReport rep = MullerParetoNe(g);
      auto front = ParetoFront(g.prefs, RealizableOutcomes(g, g.arena.Start()));
      if (std::find(front.begin(), front.end(), rep.outcome) == front.end())
        t.Fail(id + " outcome is not Pareto-optimal");
      if (VerifyNe(g, rep.profile)) t.Fail(id + " has a profitable deviation");
    } catch (const std::exception& e) {
      t.Fail(id + " threw: " + e.what());
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = t.violations == 0 && t.checked >= 200;
  r.detail = t.Summary("games") + " (" + std::to_string(nontrivial) + " with several outcomes)";
  return r;
}

// Best payoff `a` reaches below `n` when everybody else follows `profile`.
Rational BestResponseValue(const TreeGame& tree, const TreeProfile& profile, int a, int n) {
  const TreeNode& node = tree.nodes[n];
  if (node.owner < 0) return node.payoffs[a];
  if (node.owner != a) return BestResponseValue(tree, profile, a, node.children[profile[n]]);
  Rational best = BestResponseValue(tree, profile, a, node.children[0]);
  for (size_t i = 1; i < node.children.size(); ++i)
    best = std::max(best, BestResponseValue(tree, profile, a, node.children[i]));
  return best;
}

// 7. Discretized equilibria are 1/k-equilibria of the original payoffs.
CriterionResult EpsilonGrid(std::uint64_t seed) {
  CriterionResult r{7, "epsilon grid", false, "", 0};
  gen::Rng rng(seed + 7);
  Tally t;
  const auto start = Clock::now();
  for (int i = 0; i < 2000; ++i) {
    TreeGame tree = gen::RandomPayoffTree(rng, gen::Uniform(rng, 1, 4), gen::Uniform(rng, 1, 3));
    for (int k : {1, 2, 4}) {
      EpsilonGridResult res = EpsilonGridGame(tree, k);
      ++t.checked;
      const TreeProfile& profile = res.certificate.profile;
      const int leaf = PlayLeaf(tree, profile);
      for (int a = 0; a < tree.NumPlayers(); ++a) {
        Rational gain = BestResponseValue(tree, profile, a, 0) - tree.nodes[leaf].payoffs[a];
        if (gain > Rational(1, k))
          t.Fail("tree " + std::to_string(i) + " k=" + std::to_string(k) + " gain " +
                 FormatRational(gain));
      }
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = t.violations == 0;
  r.detail = t.Summary("tree/k pairs");
  return r;
}

// 8. Gallery regressions.
CriterionResult Gallery(std::uint64_t) {
  CriterionResult r{8, "gallery regressions", false, "", 0};
  const auto start = Clock::now();
  Tally t;
  for (int d = 2; d <= 10; ++d) {
    TreeGame tree = NonashTruncation(d);
    ++t.checked;
    if (tree.nodes[BackwardInduction(tree).leaf[0]].payoffs[0] != Rational(d - 1, d))
      t.Fail("nonash depth " + std::to_string(d));
  }
  for (int d = 3; d <= 10; ++d) {
    TreeGame tree = EscapeTruncation(d);
    InductionResult bi = BackwardInduction(tree);
    ++t.checked;
    const int deepest_b = d % 2 == 0 ? d - 1 : d - 2;  // spine node j sits at depth j
    if (tree.outcomes[tree.nodes[bi.leaf[0]].outcome] != "y")
      t.Fail("escape depth " + std::to_string(d) + " root outcome");
    if (tree.nodes[deepest_b].owner != 1 || bi.profile[deepest_b] != 1)
      t.Fail("escape depth " + std::to_string(d) + " deepest b-node continues");
  }
  TreeGame six = SixOutcomeExample();
  std::vector<std::string> names;
  for (Outcome o : EnumerateNeOutcomes(six)) names.push_back(six.outcomes[o]);
  ++t.checked;
  if (names != std::vector<std::string>{"z", "gamma"}) t.Fail("six-outcome NE outcomes");
  auto weak = WeakParetoFront(six.prefs, TreeRealizableOutcomes(six));
  for (Outcome o : EnumerateNeOutcomes(six))
    if (std::find(weak.begin(), weak.end(), o) != weak.end())
      t.Fail("six-outcome NE outcome " + six.outcomes[o] + " is weakly Pareto-optimal");
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = t.violations == 0;
  r.detail = t.Summary("checks") + "; six-outcome NE outcomes {z, gamma}, neither weakly Pareto-optimal";
  return r;
}

// 9. Budgets along long random runs follow the clamping recurrence, and
// guarantees on the product are locally consistent.
CriterionResult Energy(std::uint64_t seed) {
  CriterionResult r{9, "energy product", false, "", 0};
  gen::Rng rng(seed + 9);
  Tally t;
  const auto start = Clock::now();
  for (int i = 0; i < 100; ++i) {
    const std::string id = "arena " + std::to_string(i);
    Arena arena = gen::RandomArena(rng, gen::Uniform(rng, 1, 4), gen::Uniform(rng, 1, 2));
    EnergySpec spec = gen::RandomEnergySpec(rng, arena);
    EnergyGame eg = MakeEnergyGame(arena, spec);
    const EnergyProduct& prod = eg.product;
    const int players = arena.NumPlayers();
    ++t.checked;
    std::vector<long long> budget(players, 0), low(players, 0);
    Vertex v = arena.Start();
    int node = prod.arena.Start();
    for (int step = 0; step < 1000; ++step) {
      for (int p = 0; p < players; ++p) {
        long long b = budget[p] + spec.weight[p][v];
        b = std::max(std::min(b, spec.caps[p].second), spec.caps[p].first);
        budget[p] = b;
        low[p] = std::min(low[p], b);
      }
      if (prod.base[node] != v || prod.budget[node] != budget || prod.minimum[node] != low) {
        t.Fail(id + " diverges at step " + std::to_string(step));
        break;
      }
      const auto& succ = arena.Successors(v);
      Vertex next = succ[gen::Uniform(rng, 0, static_cast<int>(succ.size()) - 1)];
      int next_node = -1;
      for (int w : prod.arena.Successors(node))
        if (prod.base[w] == next) next_node = w;
      if (next_node < 0) {
        t.Fail(id + " product misses a move at step " + std::to_string(step));
        break;
      }
      v = next;
      node = next_node;
    }
    GuaranteeTable table = ComputeGuarantees(eg.game);
    const Arena& pa = eg.game.arena;
    for (Player p = 0; p < players; ++p)
      for (Vertex u = 0; u < pa.NumVertices(); ++u) {
        int best = -1, worst = 1 << 30;
        for (Vertex w : pa.Successors(u)) {
          best = std::max(best, table.players[p].value[w]);
          worst = std::min(worst, table.players[p].value[w]);
        }
        if (table.players[p].value[u] != (pa.Owner(u) == p ? best : worst))
          t.Fail(id + " guarantee not locally consistent at " + pa.Id(u));
      }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = t.violations == 0;
  r.detail = t.Summary("arenas") + ", 1000-step runs";
  return r;
}

}  // namespace

CriterionResult RunCriterion(int id, std::uint64_t seed) {
  static const std::function<CriterionResult(std::uint64_t)> kAll[] = {
      Determinacy, SolverOracle, NeSoundness,  AntagonisticSpe, ParetoBiconditional,
      MullerPareto, EpsilonGrid, Gallery, Energy};
  if (id < 1 || id > kNumCriteria)
    throw Error(ErrorCode::kOutOfRange, "criterion ids are 1.." + std::to_string(kNumCriteria));
  try {
    return kAll[id - 1](seed);
  } catch (const std::exception& e) {
    return CriterionResult{id, "criterion " + std::to_string(id), false,
                           std::string("aborted: ") + e.what(), 0};
  }
}

std::vector<CriterionResult> RunAll(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kNumCriteria; ++id) out.push_back(RunCriterion(id, seed));
  return out;
}

std::string FormatLine(const CriterionResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << " ("
    << r.seconds << "s)";
  return s.str();
}

}  // namespace eqsynth::acceptance
