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


#ifndef EQSYNTH_EQUILIBRIA_HPP_
#define EQSYNTH_EQUILIBRIA_HPP_

#include <optional>
#include <vector>

#include "eqsynth/arena.hpp"
#include "eqsynth/guarantees.hpp"
#include "eqsynth/orders.hpp"

namespace eqsynth {

struct PunishmentEntry {
  Player deviator;
  Vertex vertex;  // where the deviation leads
  int rank;       // deviator's class the coalition holds her to
  bool operator==(const PunishmentEntry&) const = default;
};

struct SynthesisReport {
  StrategyProfile profile;
  Lasso main_lasso;
  Outcome outcome = 0;
  std::vector<int> bits;  // per player
  int bound = 0;          // |A| (m + ceil(log2 n) + K) + 1
  int m = 0, n = 0, K = 0;
  std::vector<PunishmentEntry> punishments;
};

// Nash equilibrium: everybody follows the play induced by the optimal
// strategies, and the first player to leave it is punished by the others.
SynthesisReport SynthesizeNe(const GraphGame& game);

struct DeviationWitness {
  Player player = 0;
  Vertex vertex = 0;  // last vertex shared by both plays, owned by `player`
  StrategyMachine machine;
  Lasso play;
  Outcome improved = 0;
  Outcome induced = 0;
};

// Checks every player's unilateral deviations from `from` with the given
// joint memory (all zero by default).
std::optional<DeviationWitness> VerifyNe(const GraphGame& game, const StrategyProfile& profile);
std::optional<DeviationWitness> VerifyNe(const GraphGame& game, const StrategyProfile& profile,
                                         Vertex from, const std::vector<int>& memory);

// Two players with mutually inverse preferences, both playing optimally
// after every history. Throws kNotAntagonistic otherwise.
StrategyProfile SynthesizeAntagonisticSpe(const GraphGame& game);
// Whether the two best guarantees meet at every vertex.
bool GuaranteesMeet(const GraphGame& game, const GuaranteeTable& table);

struct SpeFailure {
  Vertex vertex;
  std::vector<int> memory;
  DeviationWitness deviation;
};
// Runs VerifyNe from every (vertex, joint memory) reachable when all moves
// are allowed.
std::optional<SpeFailure> VerifySpe(const GraphGame& game, const StrategyProfile& profile,
                                    int max_states = kDefaultProductBound);

class PatternPresentError : public Error {
 public:
  explicit PatternPresentError(const PatternWitness& witness);
  const PatternWitness& witness() const { return witness_; }

 private:
  PatternWitness witness_;
};

// Outcomes o such that some play from the start with outcome o never visits
// a vertex whose owner could secure more than o there.
std::vector<Outcome> SupportableOutcomes(const GraphGame& game, const GuaranteeTable& table);

// Pareto-optimal NE for explicit outcome maps and linear preferences.
// Throws PatternPresentError when the forbidden pattern occurs.
SynthesisReport MullerParetoNe(const GraphGame& game);

}  // namespace eqsynth

#endif  // EQSYNTH_EQUILIBRIA_HPP_
