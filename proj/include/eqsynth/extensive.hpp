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


#ifndef EQSYNTH_EXTENSIVE_HPP_
#define EQSYNTH_EXTENSIVE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "eqsynth/orders.hpp"

namespace eqsynth {

inline constexpr long long kDefaultProfileCap = 1000000;

struct TreeNode {
  int owner = -1;  // -1 marks a leaf
  std::vector<int> children;
  Outcome outcome = -1;           // outcome trees
  std::vector<Rational> payoffs;  // payoff trees, one per player
};

// Finite game tree rooted at node 0. Leaves carry either an outcome (ranked
// by `prefs`, one relation per player) or a payoff per player. Children are
// always stored after their parent.
struct TreeGame {
  std::vector<std::string> players;
  std::vector<std::string> outcomes;  // empty for payoff trees
  std::vector<Relation> prefs;        // empty for payoff trees
  std::vector<TreeNode> nodes;

  int NumPlayers() const { return static_cast<int>(players.size()); }
  int NumNodes() const { return static_cast<int>(nodes.size()); }
  bool IsPayoffGame() const { return outcomes.empty(); }
  bool IsLeaf(int n) const { return nodes[n].owner < 0; }
  // Player a strictly prefers leaf `hi` to leaf `lo`.
  bool Prefers(int a, int lo, int hi) const;
  std::vector<int> Leaves() const;
};

// Throws kInvalidInput on structural problems.
void ValidateTree(const TreeGame& tree);

// Child position chosen at each node; -1 at leaves.
using TreeProfile = std::vector<int>;

int PlayLeaf(const TreeGame& tree, const TreeProfile& profile, int from = 0);
// Leaves reachable from `from` when `player` may choose freely and everyone
// else follows `profile`.
std::vector<int> DeviationLeaves(const TreeGame& tree, const TreeProfile& profile, int player,
                                 int from = 0);

struct TreeDeviation {
  int player;
  int leaf;
};
std::optional<TreeDeviation> FindTreeDeviation(const TreeGame& tree, const TreeProfile& profile,
                                               int from = 0);
bool IsTreeNash(const TreeGame& tree, const TreeProfile& profile, int from = 0);
bool IsTreeSubgamePerfect(const TreeGame& tree, const TreeProfile& profile);

struct InductionResult {
  TreeProfile profile;
  std::vector<int> leaf;  // leaf reached from each node
};
// The owner takes a best child, lowest position among equals. Outcome trees
// need strict weak orders (kInvalidInput otherwise).
InductionResult BackwardInduction(const TreeGame& tree);

// Every pure profile; throws kCapExceeded above `cap` profiles.
std::vector<int> EnumerateNeLeaves(const TreeGame& tree, long long cap = kDefaultProfileCap);
std::vector<Outcome> EnumerateNeOutcomes(const TreeGame& tree,
                                         long long cap = kDefaultProfileCap);
long long CountProfiles(const TreeGame& tree);

// The subtree below `node` as a game of its own.
TreeGame Subtree(const TreeGame& tree, int node);

std::vector<Outcome> TreeRealizableOutcomes(const TreeGame& tree);
bool HasParetoOptimalNe(const TreeGame& tree, long long cap = kDefaultProfileCap);

// Largest payoff gain of a unilateral deviation from `from`, 0 if none.
Rational MaxDeviationGain(const TreeGame& tree, const TreeProfile& profile, int from = 0);

struct EpsilonCertificate {
  int k = 1;
  TreeProfile profile;
  Rational max_gain;
  bool holds = false;  // max_gain <= 1/k
};
struct EpsilonGridResult {
  TreeGame index_game;
  EpsilonCertificate certificate;
};
// Payoffs must lie in [0,1].
EpsilonGridResult EpsilonGridGame(const TreeGame& tree, int k);

// Gallery. Continue branches come first so ties keep playing.
TreeGame NonashTruncation(int depth);
TreeGame EscapeTruncation(int depth);
TreeGame UscTruncation(int depth);
// Root owned by `root` with children [inner, z]; the other player owns inner
// with children [x, y]. Two players.
TreeGame ThreeLeafGame(const PreferenceProfile& prefs, int root, Outcome x, Outcome y,
                       Outcome z);
// Same over partial preferences.
TreeGame ThreeLeafGame(const std::vector<std::string>& players,
                       const std::vector<std::string>& outcomes,
                       const std::vector<Relation>& prefs, int root, Outcome x, Outcome y,
                       Outcome z);
// Every instance of the three-leaf template (both root owners, every
// labeling by distinct outcomes) has a Pareto-optimal NE.
bool TemplateHasParetoNe(const PreferenceProfile& prefs);
TreeGame SixOutcomeExample();
TreeGame FourOutcomeExample();

std::string ToDot(const TreeGame& tree);

}  // namespace eqsynth

#endif  // EQSYNTH_EXTENSIVE_HPP_
