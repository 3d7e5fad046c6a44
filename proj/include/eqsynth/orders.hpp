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

#ifndef EQSYNTH_ORDERS_HPP_
#define EQSYNTH_ORDERS_HPP_

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

namespace eqsynth {

// Outcomes and players are referred to by dense indices; names live in the
// owning containers.
using Outcome = int;
using Rational = boost::rational<long long>;

// Parses "p/q" or "p"; throws Error(kInvalidInput) on malformed text.
Rational ParseRational(const std::string& text);
std::string FormatRational(const Rational& r);

// A strict weak order stored as a rank function: x < y iff rank(x) < rank(y).
// Ranks are dense, 0 is the least preferred class.
class StrictWeakOrder {
 public:
  StrictWeakOrder() = default;
  explicit StrictWeakOrder(std::vector<int> ranks);

  // Rank groups listed worst to best.
  static StrictWeakOrder FromGroups(int num_outcomes,
                                    const std::vector<std::vector<Outcome>>& groups);

  bool Less(Outcome x, Outcome y) const { return ranks_[x] < ranks_[y]; }
  int Rank(Outcome o) const { return ranks_[o]; }
  int NumOutcomes() const { return static_cast<int>(ranks_.size()); }
  int NumClasses() const { return num_classes_; }
  bool IsLinear() const { return num_classes_ == NumOutcomes(); }
  const std::vector<int>& ranks() const { return ranks_; }

  // Outcomes of one class in increasing index order.
  std::vector<Outcome> Class(int rank) const;
  std::vector<std::vector<Outcome>> Groups() const;
  StrictWeakOrder Inverse() const;

  bool operator==(const StrictWeakOrder&) const = default;

 private:
  std::vector<int> ranks_;
  int num_classes_ = 0;
};

// A general binary relation over outcomes (boolean matrix). Used as the raw
// input of CheckStrictWeakOrder and for partial preferences on finite trees.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n) : n_(n), cells_(static_cast<size_t>(n) * n, 0) {}

  static Relation FromOrder(const StrictWeakOrder& order);
  // Transitive closure of the given pairs (x, y) meaning x < y.
  static Relation Closure(int n, const std::vector<std::pair<Outcome, Outcome>>& pairs);

  int size() const { return n_; }
  bool Holds(Outcome x, Outcome y) const { return cells_[x * n_ + y] != 0; }
  void Set(Outcome x, Outcome y, bool value = true) { cells_[x * n_ + y] = value; }

 private:
  int n_ = 0;
  std::vector<char> cells_;
};

// One preference per player, all over the same outcome set.
struct PreferenceProfile {
  std::vector<std::string> players;
  std::vector<std::string> outcomes;
  std::vector<StrictWeakOrder> orders;

  int NumPlayers() const { return static_cast<int>(orders.size()); }
  int NumOutcomes() const { return static_cast<int>(outcomes.size()); }
  bool AllLinear() const;
  std::vector<Relation> Relations() const;
};

enum class SwoAxiom { kIrreflexivity, kTransitivity, kNegativeTransitivity };

struct SwoViolation {
  SwoAxiom axiom;
  Outcome x, y, z;
};

// Accepts iff rel is irreflexive, transitive and negatively transitive.
std::variant<StrictWeakOrder, SwoViolation> CheckStrictWeakOrder(const Relation& rel);

// {o' : o < o'}, in increasing index order.
std::vector<Outcome> TerminalInterval(Outcome o, const StrictWeakOrder& order);

struct PatternWitness {
  int a, b;
  Outcome x, y, z;
  bool operator==(const PatternWitness&) const = default;
};

// Finds players a, b and outcomes with z <_a y <_a x and x <_b z <_b y.
// Scans (a, b, x, y, z) lexicographically and returns the first hit.
std::optional<PatternWitness> FindForbiddenPattern(std::span<const Relation> prefs);
std::optional<PatternWitness> FindForbiddenPattern(const PreferenceProfile& prefs);

struct SlicePartition {
  // Slices from least to most preferred; each slice sorted worst to best
  // under the reference player (player 0).
  std::vector<std::vector<Outcome>> slices;
  // aligned[i][p]: player p orders slice i like the reference player.
  std::vector<std::vector<bool>> aligned;
};

// Finest partition whose slices are ordered by consensus and inside which
// every player agrees with the reference order or its inverse. Requires
// linear, pattern-free preferences; throws kNotLinear / kPatternPresent.
SlicePartition ComputeSlicePartition(const PreferenceProfile& prefs);

// q dominates o when some player strictly prefers q and no player strictly
// prefers o. Both functions return the undominated realizable outcomes, in
// the order given. The weak notion reads "o <= q" as "not q < o", under which
// it coincides with the strong one; it is kept as a separate entry point so
// callers can name the notion they report.
std::vector<Outcome> ParetoFront(std::span<const Relation> prefs,
                                 const std::vector<Outcome>& realizable);
std::vector<Outcome> ParetoFront(const PreferenceProfile& prefs,
                                 const std::vector<Outcome>& realizable);
std::vector<Outcome> WeakParetoFront(std::span<const Relation> prefs,
                                     const std::vector<Outcome>& realizable);

// Per player, the grid cell index i in 1..k+1 with (i-1)/k <= p < i/k
// (p = 1 maps to k+1). Throws kOutOfRange for payoffs outside [0,1] or k < 1.
std::vector<int> GridDiscretize(std::span<const Rational> payoffs, int k);

}  // namespace eqsynth

#endif  // EQSYNTH_ORDERS_HPP_
