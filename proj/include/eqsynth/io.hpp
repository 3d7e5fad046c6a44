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


#ifndef EQSYNTH_IO_HPP_
#define EQSYNTH_IO_HPP_

// JSON documents for games, machines and results. Keys come out sorted, so
// equal values serialize to identical bytes.

#include <string>
#include <vector>

#include "eqsynth/arena.hpp"
#include "eqsynth/equilibria.hpp"
#include "eqsynth/extensive.hpp"
#include "eqsynth/guarantees.hpp"
#include "eqsynth/winlose.hpp"
#include "json.hpp"

namespace eqsynth::io {

using Json = nlohmann::json;

// Arena that failed validation; carries every issue.
class InvalidArena : public Error {
 public:
  explicit InvalidArena(std::vector<ArenaIssue> issues);
  const std::vector<ArenaIssue>& issues() const { return issues_; }

 private:
  std::vector<ArenaIssue> issues_;
};

Json ParseText(const std::string& text);  // kInvalidInput on syntax errors
Json ReadFile(const std::string& path);

RawArena RawArenaFromJson(const Json& j);
Arena ArenaFromJson(const Json& j);  // throws InvalidArena
Json ToJson(const Arena& arena);

// Optional "energy" block of an arena document; "parity_goal" per player is
// "even" (default) or "odd".
bool HasEnergy(const Json& j);
EnergySpec EnergyFromJson(const Json& j, const Arena& arena);

VertexSet VertexSetFromJson(const Json& j, const Arena& arena);
Json ToJson(const VertexSet& set, const Arena& arena);
Json ToJson(const Lasso& lasso, const Arena& arena);

Objective ObjectiveFromJson(const Json& j, const Arena& arena);
// Arena fields plus "objective" and either "protagonist" (a player name) or
// "side0" (vertex ids).
WinLoseGame WinLoseGameFromJson(const Json& j);
Json ToJson(const SolveResult& result, const Arena& arena);

// {"A": [["z"], ["y"], ["x"]]}: rank groups worst to best.
PreferenceProfile PreferencesFromJson(const Json& j, const std::vector<std::string>& players,
                                      const std::vector<std::string>& outcomes);
Json ToJson(const PreferenceProfile& prefs);

// Arena fields plus "outcomes", "outcome_map" (array of {"inf": [...],
// "outcome": o}), optional "default_outcome" and "preferences".
GraphGame GraphGameFromJson(const Json& j);
// Explicit outcome maps only.
Json ToJson(const GraphGame& game);

Json ToJson(const StrategyMachine& machine, const Arena& arena);
// Same with an explicit owner label (e.g. a side of a win/lose game).
Json ToJson(const StrategyMachine& machine, const Arena& arena, const std::string& owner);
// `player` is -1 for coalition machines.
StrategyMachine MachineFromJson(const Json& j, const Arena& arena, int player);
Json ToJson(const StrategyProfile& profile, const Arena& arena);
// {"machines": {"A": machine, ...}}; one machine per player, each must
// control exactly that player's vertices.
StrategyProfile ProfileFromJson(const Json& j, const Arena& arena);

Json ToJson(const SynthesisReport& report, const GraphGame& game);
Json ToJson(const DeviationWitness& witness, const GraphGame& game);
Json ToJson(const SpeFailure& failure, const GraphGame& game);
Json ToJson(const GuaranteeTable& table, const GraphGame& game);
Json ToJson(const PatternWitness& witness, const PreferenceProfile& prefs);

// {"players": [...], "outcomes": [...], "preferences": {...}, "tree": node}
// with nodes {"owner", "children"} and leaves {"outcome"} or {"payoffs"}.
// A preference may also be {"less": [[x, y], ...]} for partial orders.
TreeGame TreeFromJson(const Json& j);
Json ToJson(const TreeGame& tree);
Json ToJson(const EpsilonCertificate& cert, const TreeGame& tree);

}  // namespace eqsynth::io

#endif  // EQSYNTH_IO_HPP_
