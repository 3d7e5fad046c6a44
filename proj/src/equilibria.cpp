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

#include "eqsynth/equilibria.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace eqsynth {

namespace {

int Log2Ceil(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }

Vertex At(const Lasso& l, size_t i) {
  if (i < l.stem.size()) return l.stem[i];
  return l.cycle[(i - l.stem.size()) % l.cycle.size()];
}

// Machines that follow `lasso` and punish the first player to leave it.
class PunishingProfileBuilder {
 public:
  PunishingProfileBuilder(const GraphGame& game, const GuaranteeTable& table, const Lasso& lasso)
      : game_(game), table_(table) {
    seq_ = lasso.stem;
    seq_.insert(seq_.end(), lasso.cycle.begin(), lasso.cycle.end());
    loop_ = static_cast<int>(lasso.stem.size());
  }

  StrategyProfile Build() {
    const Arena& arena = game_.arena;
    const int n = arena.NumVertices();
    Intern({kInit, 0, 0});
    std::vector<std::vector<std::pair<int, Vertex>>> rows;
    for (size_t s = 0; s < states_.size(); ++s) {
      std::vector<std::pair<int, Vertex>> row;
      for (Vertex v = 0; v < n; ++v) {
        auto [next, choice] = Step(states_[s], v);
        row.emplace_back(Intern(next), choice);
      }
      rows.push_back(std::move(row));
    }
    StrategyProfile profile;
    for (Player a = 0; a < arena.NumPlayers(); ++a) {
      StrategyMachine m(a, n, static_cast<int>(states_.size()));
      for (size_t s = 0; s < states_.size(); ++s) {
        for (Vertex v = 0; v < n; ++v) {
          m.SetUpdate(v, static_cast<int>(s), rows[s][v].first);
          if (arena.Owner(v) != a) continue;
          m.SetControls(v, true);
          // The deviator herself just keeps moving somewhere.
          Vertex to = rows[s][v].second;
          if (states_[s].kind == kPunish && states_[s].b == a) to = arena.Successors(v)[0];
          m.SetChoice(v, static_cast<int>(s), to);
        }
      }
      profile.machines.push_back(MinimizeMachine(m));
    }
    return profile;
  }

  std::vector<PunishmentEntry> Punishments() const {
    std::set<std::tuple<Player, Vertex, int>> entries;
    for (int i = 0; i < static_cast<int>(seq_.size()); ++i) {
      Vertex u = seq_[i];
      Player b = game_.arena.Owner(u);
      Vertex expected = seq_[Next(i)];
      for (Vertex w : game_.arena.Successors(u))
        if (w != expected) entries.insert({b, w, table_.players[b].value[w]});
    }
    std::vector<PunishmentEntry> out;
    for (auto [b, w, r] : entries) out.push_back({b, w, r});
    return out;
  }

 private:
  enum Kind { kInit, kMain, kPunish };
  struct State {
    Kind kind;
    int a, b;  // kMain: a = position last read; kPunish: b deviator, a = rank
    int q = 0;
    bool operator<(const State& o) const {
      return std::tie(kind, a, b, q) < std::tie(o.kind, o.a, o.b, o.q);
    }
  };

  int Next(int i) const { return i + 1 < static_cast<int>(seq_.size()) ? i + 1 : loop_; }

  int Intern(const State& s) {
    auto [it, inserted] = index_.emplace(s, static_cast<int>(states_.size()));
    if (inserted) states_.push_back(s);
    return it->second;
  }

  const StrategyMachine& Coalition(Player b, int rank) {
    auto key = std::make_pair(b, rank);
    auto it = coalition_.find(key);
    if (it != coalition_.end()) return it->second;
    // Any vertex with this value gives the same machine.
    Vertex at = 0;
    for (Vertex v = 0; v < game_.arena.NumVertices(); ++v)
      if (table_.players[b].value[v] == rank) at = v;
    return coalition_.emplace(key, PunishmentStrategy(game_, b, at, table_.players[b]).machine)
        .first->second;
  }

  std::pair<State, Vertex> Punish(Player b, int rank, int q, Vertex v) {
    const StrategyMachine& c = Coalition(b, rank);
    Vertex to = c.Controls(v) ? c.Choice(v, q) : game_.arena.Successors(v)[0];
    return {State{kPunish, rank, b, c.Update(v, q)}, to};
  }

  std::pair<State, Vertex> Step(const State& s, Vertex v) {
    if (s.kind == kPunish) return Punish(s.b, s.a, s.q, v);
    int expect = s.kind == kInit ? 0 : Next(s.a);
    if (v == seq_[expect]) return {State{kMain, expect, 0, 0}, seq_[Next(expect)]};
    Player b = game_.arena.Owner(s.kind == kInit ? v : seq_[s.a]);
    return Punish(b, table_.players[b].value[v], 0, v);
  }

  const GraphGame& game_;
  const GuaranteeTable& table_;
  std::vector<Vertex> seq_;
  int loop_ = 0;
  std::map<State, int> index_;
  std::vector<State> states_;
  std::map<std::pair<Player, int>, StrategyMachine> coalition_;
};

SynthesisReport Report(const GraphGame& game, const GuaranteeTable& table, const Lasso& lasso) {
  PunishingProfileBuilder builder(game, table, lasso);
  SynthesisReport report;
  report.profile = builder.Build();
  report.main_lasso = lasso;
  report.outcome = game.OutcomeOf(lasso);
  report.punishments = builder.Punishments();
  report.m = table.m;
  report.n = table.n;
  report.K = table.K;
  report.bound = game.arena.NumPlayers() * (table.m + Log2Ceil(table.n) + table.K) + 1;
  for (const auto& m : report.profile.machines) report.bits.push_back(m.MemoryBits());
  return report;
}

void CheckProfile(const GraphGame& game, const StrategyProfile& profile) {
  const Arena& arena = game.arena;
  if (static_cast<int>(profile.machines.size()) != arena.NumPlayers())
    throw Error(ErrorCode::kInvalidInput, "profile needs one machine per player");
  for (Player a = 0; a < arena.NumPlayers(); ++a) {
    const StrategyMachine& m = profile.machines[a];
    if (!m.IsValidFor(arena))
      throw Error(ErrorCode::kInvalidInput,
                  "machine of " + arena.PlayerName(a) + " is not valid for the arena");
    for (Vertex v = 0; v < arena.NumVertices(); ++v)
      if (m.Controls(v) != (arena.Owner(v) == a))
        throw Error(ErrorCode::kInvalidInput,
                    "machine of " + arena.PlayerName(a) + " must control exactly her vertices");
  }
}

}  // namespace

SynthesisReport SynthesizeNe(const GraphGame& game) {
  ValidateGraphGame(game);
  GuaranteeTable table = ComputeGuarantees(game);
  std::vector<StrategyMachine> optimal;
  for (Player a = 0; a < game.arena.NumPlayers(); ++a)
    optimal.push_back(BuildOptimalStrategy(game, a, table.players[a]).machine);
  Lasso lasso = InducedLasso(game.arena, optimal, game.arena.Start());
  return Report(game, table, lasso);
}

std::optional<DeviationWitness> VerifyNe(const GraphGame& game, const StrategyProfile& profile) {
  return VerifyNe(game, profile, game.arena.Start(),
                  std::vector<int>(profile.machines.size(), 0));
}

std::optional<DeviationWitness> VerifyNe(const GraphGame& game, const StrategyProfile& profile,
                                         Vertex from, const std::vector<int>& memory) {
  CheckProfile(game, profile);
  const Arena& arena = game.arena;
  const auto& machines = profile.machines;
  Lasso induced = InducedLasso(arena, machines, from, memory);
  Outcome o = game.OutcomeOf(induced);
  for (Player a = 0; a < arena.NumPlayers(); ++a) {
    const StrictWeakOrder& order = game.Order(a);
    std::vector<StrategyMachine> others;
    std::vector<int> others_memory;
    for (Player p = 0; p < arena.NumPlayers(); ++p) {
      if (p == a) continue;
      others.push_back(machines[p]);
      others_memory.push_back(memory[p]);
    }
    ProductGraph product =
        FixMachines(arena, others, from, nullptr, kDefaultProductBound, &others_memory);
    const std::vector<ProductPlay> plays = ProductPlays(game, product);
    const ProductPlay* best = nullptr;
    for (const auto& play : plays)
      if (!best || order.Rank(play.outcome) > order.Rank(best->outcome)) best = &play;
    if (!best || order.Rank(best->outcome) <= order.Rank(o)) continue;

    // Machine of `a` that walks the witness node lasso position by position.
    NodeLasso nodes = LassoThrough(product, best->nodes);
    std::vector<int> seq = nodes.stem;
    seq.insert(seq.end(), nodes.cycle.begin(), nodes.cycle.end());
    const int len = static_cast<int>(seq.size());
    const int loop = static_cast<int>(nodes.stem.size());
    StrategyMachine m(a, arena.NumVertices(), len);
    for (Vertex v = 0; v < arena.NumVertices(); ++v) {
      bool own = arena.Owner(v) == a;
      m.SetControls(v, own);
      for (int i = 0; i < len; ++i) {
        int next = i + 1 < len ? i + 1 : loop;
        bool on_track = product.projection[seq[i]] == v;
        m.SetUpdate(v, i, on_track ? next : i);
        if (own)
          m.SetChoice(v, i, on_track ? product.projection[seq[next]] : arena.Successors(v)[0]);
      }
    }
    std::vector<StrategyMachine> deviating = machines;
    deviating[a] = MinimizeMachine(m);
    std::vector<int> deviating_memory = memory;
    deviating_memory[a] = 0;
    Lasso play = InducedLasso(arena, deviating, from, deviating_memory);
    Outcome improved = game.OutcomeOf(play);
    if (order.Rank(improved) <= order.Rank(o))
      throw std::logic_error("deviation witness does not reproduce the improvement");
    size_t i = 0;
    while (At(play, i + 1) == At(induced, i + 1)) ++i;
    return DeviationWitness{a, At(play, i), deviating[a], play, improved, o};
  }
  return std::nullopt;
}

StrategyProfile SynthesizeAntagonisticSpe(const GraphGame& game) {
  ValidateGraphGame(game);
  if (game.arena.NumPlayers() != 2 || !(game.Order(1) == game.Order(0).Inverse()))
    throw Error(ErrorCode::kNotAntagonistic,
                "antagonistic synthesis needs two players with inverse preferences");
  StrategyProfile profile;
  for (Player a = 0; a < 2; ++a) profile.machines.push_back(BuildOptimalStrategy(game, a).machine);
  return profile;
}

bool GuaranteesMeet(const GraphGame& game, const GuaranteeTable& table) {
  const int top = game.Order(0).NumClasses() - 1;
  for (Vertex v = 0; v < game.arena.NumVertices(); ++v)
    if (table.players[0].value[v] != top - table.players[1].value[v]) return false;
  return true;
}

std::optional<SpeFailure> VerifySpe(const GraphGame& game, const StrategyProfile& profile,
                                    int max_states) {
  CheckProfile(game, profile);
  const Arena& arena = game.arena;
  const auto& machines = profile.machines;
  std::map<std::pair<Vertex, std::vector<int>>, int> seen;
  std::vector<std::pair<Vertex, std::vector<int>>> order;
  auto visit = [&](Vertex v, std::vector<int> memory) {
    if (seen.emplace(std::make_pair(v, memory), static_cast<int>(order.size())).second) {
      if (static_cast<int>(order.size()) >= max_states)
        throw Error(ErrorCode::kTooLarge, "too many histories to check");
      order.emplace_back(v, std::move(memory));
    }
  };
  visit(arena.Start(), std::vector<int>(machines.size(), 0));
  for (size_t i = 0; i < order.size(); ++i) {
    auto [v, memory] = order[i];
    if (auto witness = VerifyNe(game, profile, v, memory))
      return SpeFailure{v, memory, std::move(*witness)};
    std::vector<int> next(memory.size());
    for (size_t p = 0; p < machines.size(); ++p) next[p] = machines[p].Update(v, memory[p]);
    for (Vertex w : arena.Successors(v)) visit(w, next);
  }
  return std::nullopt;
}

PatternPresentError::PatternPresentError(const PatternWitness& witness)
    : Error(ErrorCode::kPatternPresent, "preferences contain the forbidden pattern"),
      witness_(witness) {}

namespace {

graph::Mask GoodFor(const GraphGame& game, const GuaranteeTable& table, Outcome o) {
  graph::Mask good(game.arena.NumVertices(), 0);
  for (Vertex u = 0; u < game.arena.NumVertices(); ++u) {
    Player owner = game.arena.Owner(u);
    good[u] = game.Order(owner).Rank(o) >= table.players[owner].value[u];
  }
  return good;
}

// First feasible inf-set with outcome o inside `good`, reachable from the
// start through `good`.
std::optional<VertexSet> SupportingSet(const GraphGame& game, const graph::Mask& good, Outcome o) {
  const Arena& arena = game.arena;
  if (!good[arena.Start()]) return std::nullopt;
  int from[] = {arena.Start()};
  graph::Mask reach = graph::Reachable(arena.Graph(), from, good);
  for (const auto& set : FeasibleInfSets(arena, arena.Start())) {
    if (game.outcomes.Of(set) != o) continue;
    if (std::all_of(set.begin(), set.end(), [&](Vertex v) { return reach[v] != 0; })) return set;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Outcome> SupportableOutcomes(const GraphGame& game, const GuaranteeTable& table) {
  std::vector<Outcome> out;
  for (Outcome o : RealizableOutcomes(game, game.arena.Start()))
    if (SupportingSet(game, GoodFor(game, table, o), o)) out.push_back(o);
  return out;
}

SynthesisReport MullerParetoNe(const GraphGame& game) {
  ValidateGraphGame(game);
  if (!game.outcomes.IsExplicit())
    throw Error(ErrorCode::kInvalidInput, "Pareto synthesis needs an explicit outcome map");
  if (auto witness = FindForbiddenPattern(game.prefs)) throw PatternPresentError(*witness);
  if (!game.prefs.AllLinear())
    throw Error(ErrorCode::kNotLinear, "Pareto synthesis needs linear preferences");
  const Arena& arena = game.arena;
  GuaranteeTable table = ComputeGuarantees(game);
  std::vector<Outcome> supportable = SupportableOutcomes(game, table);
  std::vector<Outcome> front = ParetoFront(game.prefs, RealizableOutcomes(game, arena.Start()));
  for (Outcome o : front) {
    if (!std::binary_search(supportable.begin(), supportable.end(), o)) continue;
    graph::Mask good = GoodFor(game, table, o);
    VertexSet set = *SupportingSet(game, good, o);
    graph::Mask goal(arena.NumVertices(), 0);
    for (Vertex v : set) goal[v] = 1;
    std::vector<int> path = *graph::ShortestPath(arena.Graph(), arena.Start(), goal, good);
    std::vector<int> ordered{path.back()};
    for (Vertex v : set)
      if (v != path.back()) ordered.push_back(v);
    Lasso lasso;
    lasso.stem.assign(path.begin(), path.end() - 1);
    lasso.cycle = graph::CoveringCycle(arena.Graph(), ordered);
    return Report(game, table, NormalizeLasso(std::move(lasso)));
  }
  throw std::logic_error("no supportable Pareto-optimal outcome");
}

}  // namespace eqsynth
