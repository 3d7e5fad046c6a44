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

#include "eqsynth/orders.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "eqsynth/error.hpp"

namespace eqsynth {

Rational ParseRational(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> long long {
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidInput, "bad rational: '" + text + "'");
    }
    if (used != s.size())
      throw Error(ErrorCode::kInvalidInput, "bad rational: '" + text + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  long long num = parse_int(text.substr(0, slash));
  long long den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator: '" + text + "'");
  return Rational(num, den);
}

std::string FormatRational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

StrictWeakOrder::StrictWeakOrder(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  // Compress to dense ranks.
  std::vector<int> distinct = ranks_;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int& r : ranks_)
    r = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), r) - distinct.begin());
  num_classes_ = static_cast<int>(distinct.size());
}

StrictWeakOrder StrictWeakOrder::FromGroups(int num_outcomes,
                                            const std::vector<std::vector<Outcome>>& groups) {
  std::vector<int> ranks(num_outcomes, -1);
  for (size_t g = 0; g < groups.size(); ++g) {
    for (Outcome o : groups[g]) {
      if (o < 0 || o >= num_outcomes)
        throw Error(ErrorCode::kInvalidInput, "rank group names an unknown outcome");
      if (ranks[o] != -1)
        throw Error(ErrorCode::kInvalidInput, "outcome listed in two rank groups");
      ranks[o] = static_cast<int>(g);
    }
  }
  if (std::find(ranks.begin(), ranks.end(), -1) != ranks.end())
    throw Error(ErrorCode::kInvalidInput, "rank groups do not cover every outcome");
  return StrictWeakOrder(std::move(ranks));
}

std::vector<Outcome> StrictWeakOrder::Class(int rank) const {
  std::vector<Outcome> out;
  for (Outcome o = 0; o < NumOutcomes(); ++o)
    if (ranks_[o] == rank) out.push_back(o);
  return out;
}

std::vector<std::vector<Outcome>> StrictWeakOrder::Groups() const {
  std::vector<std::vector<Outcome>> groups(num_classes_);
  for (Outcome o = 0; o < NumOutcomes(); ++o) groups[ranks_[o]].push_back(o);
  return groups;
}

StrictWeakOrder StrictWeakOrder::Inverse() const {
  std::vector<int> inv(ranks_.size());
  for (size_t i = 0; i < ranks_.size(); ++i) inv[i] = num_classes_ - 1 - ranks_[i];
  return StrictWeakOrder(std::move(inv));
}

Relation Relation::FromOrder(const StrictWeakOrder& order) {
  Relation rel(order.NumOutcomes());
  for (Outcome x = 0; x < rel.size(); ++x)
    for (Outcome y = 0; y < rel.size(); ++y) rel.Set(x, y, order.Less(x, y));
  return rel;
}

Relation Relation::Closure(int n, const std::vector<std::pair<Outcome, Outcome>>& pairs) {
  Relation rel(n);
  for (auto [x, y] : pairs) rel.Set(x, y);
  // Warshall.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rel.Holds(i, k))
        for (int j = 0; j < n; ++j)
          if (rel.Holds(k, j)) rel.Set(i, j);
  return rel;
}

bool PreferenceProfile::AllLinear() const {
  return std::all_of(orders.begin(), orders.end(),
                     [](const StrictWeakOrder& o) { return o.IsLinear(); });
}

std::vector<Relation> PreferenceProfile::Relations() const {
  std::vector<Relation> rels;
  rels.reserve(orders.size());
  for (const auto& o : orders) rels.push_back(Relation::FromOrder(o));
  return rels;
}

std::variant<StrictWeakOrder, SwoViolation> CheckStrictWeakOrder(const Relation& rel) {
  const int n = rel.size();
  for (Outcome x = 0; x < n; ++x)
    if (rel.Holds(x, x)) return SwoViolation{SwoAxiom::kIrreflexivity, x, x, x};
  for (Outcome x = 0; x < n; ++x)
    for (Outcome y = 0; y < n; ++y)
      for (Outcome z = 0; z < n; ++z) {
        if (rel.Holds(x, y) && rel.Holds(y, z) && !rel.Holds(x, z))
          return SwoViolation{SwoAxiom::kTransitivity, x, y, z};
      }
  for (Outcome x = 0; x < n; ++x)
    for (Outcome y = 0; y < n; ++y)
      for (Outcome z = 0; z < n; ++z) {
        if (!rel.Holds(x, y) && !rel.Holds(y, z) && rel.Holds(x, z))
          return SwoViolation{SwoAxiom::kNegativeTransitivity, x, y, z};
      }
  // Incomparability classes are linearly ordered; the number of strict
  // predecessors identifies the class.
  std::vector<int> ranks(n, 0);
  for (Outcome x = 0; x < n; ++x)
    for (Outcome y = 0; y < n; ++y)
      if (rel.Holds(y, x)) ++ranks[x];
  return StrictWeakOrder(std::move(ranks));
}

std::vector<Outcome> TerminalInterval(Outcome o, const StrictWeakOrder& order) {
  std::vector<Outcome> out;
  for (Outcome p = 0; p < order.NumOutcomes(); ++p)
    if (order.Less(o, p)) out.push_back(p);
  return out;
}

std::optional<PatternWitness> FindForbiddenPattern(std::span<const Relation> prefs) {
  const int players = static_cast<int>(prefs.size());
  if (players == 0) return std::nullopt;
  const int n = prefs[0].size();
  for (int a = 0; a < players; ++a)
    for (int b = 0; b < players; ++b)
      for (Outcome x = 0; x < n; ++x)
        for (Outcome y = 0; y < n; ++y)
          for (Outcome z = 0; z < n; ++z) {
            const Relation& ra = prefs[a];
            const Relation& rb = prefs[b];
            if (ra.Holds(z, y) && ra.Holds(y, x) && rb.Holds(x, z) && rb.Holds(z, y))
              return PatternWitness{a, b, x, y, z};
          }
  return std::nullopt;
}

std::optional<PatternWitness> FindForbiddenPattern(const PreferenceProfile& prefs) {
  auto rels = prefs.Relations();
  return FindForbiddenPattern(std::span<const Relation>(rels));
}

SlicePartition ComputeSlicePartition(const PreferenceProfile& prefs) {
  if (prefs.NumPlayers() == 0 || prefs.NumOutcomes() == 0)
    throw Error(ErrorCode::kInvalidInput, "slice partition needs players and outcomes");
  if (!prefs.AllLinear())
    throw Error(ErrorCode::kNotLinear, "slice partition requires linear preferences");
  if (auto w = FindForbiddenPattern(prefs))
    throw Error(ErrorCode::kPatternPresent,
                "forbidden pattern between " + prefs.players[w->a] + " and " +
                    prefs.players[w->b]);

  const int n = prefs.NumOutcomes();
  const StrictWeakOrder& ref = prefs.orders[0];
  std::vector<Outcome> by_ref(n);
  std::iota(by_ref.begin(), by_ref.end(), 0);
  std::sort(by_ref.begin(), by_ref.end(),
            [&](Outcome x, Outcome y) { return ref.Rank(x) < ref.Rank(y); });

  // A cut after position i is valid when every player ranks the whole prefix
  // below the whole suffix.
  auto valid_cut = [&](int i) {
    for (const auto& ord : prefs.orders) {
      int worst_above = n, best_below = -1;
      for (int j = 0; j <= i; ++j) best_below = std::max(best_below, ord.Rank(by_ref[j]));
      for (int j = i + 1; j < n; ++j) worst_above = std::min(worst_above, ord.Rank(by_ref[j]));
      if (best_below >= worst_above) return false;
    }
    return true;
  };

  SlicePartition part;
  std::vector<Outcome> current;
  for (int i = 0; i < n; ++i) {
    current.push_back(by_ref[i]);
    if (i == n - 1 || valid_cut(i)) {
      part.slices.push_back(current);
      current.clear();
    }
  }

  for (const auto& slice : part.slices) {
    std::vector<bool> flags;
    for (const auto& ord : prefs.orders) {
      bool same = true, inverse = true;
      for (size_t i = 0; i + 1 < slice.size(); ++i) {
        if (!ord.Less(slice[i], slice[i + 1])) same = false;
        if (!ord.Less(slice[i + 1], slice[i])) inverse = false;
      }
      if (!same && !inverse)
        throw Error(ErrorCode::kPatternPresent,
                    "slice order is neither aligned nor reversed");
      flags.push_back(same);
    }
    part.aligned.push_back(std::move(flags));
  }
  return part;
}

namespace {

bool Dominates(std::span<const Relation> prefs, Outcome q, Outcome o) {
  bool someone_better = false;
  for (const auto& rel : prefs) {
    if (rel.Holds(q, o)) return false;
    if (rel.Holds(o, q)) someone_better = true;
  }
  return someone_better;
}

}  // namespace

std::vector<Outcome> ParetoFront(std::span<const Relation> prefs,
                                 const std::vector<Outcome>& realizable) {
  std::vector<Outcome> front;
  for (Outcome o : realizable) {
    bool dominated = std::any_of(realizable.begin(), realizable.end(),
                                 [&](Outcome q) { return q != o && Dominates(prefs, q, o); });
    if (!dominated) front.push_back(o);
  }
  return front;
}

std::vector<Outcome> ParetoFront(const PreferenceProfile& prefs,
                                 const std::vector<Outcome>& realizable) {
  auto rels = prefs.Relations();
  return ParetoFront(std::span<const Relation>(rels), realizable);
}

std::vector<Outcome> WeakParetoFront(std::span<const Relation> prefs,
                                     const std::vector<Outcome>& realizable) {
  std::vector<Outcome> front;
  for (Outcome o : realizable) {
    bool dominated = false;
    for (Outcome q : realizable) {
      if (q == o) continue;
      bool strict = false, never_worse = true;
      for (const auto& rel : prefs) {
        if (rel.Holds(o, q)) strict = true;
        if (rel.Holds(q, o)) never_worse = false;
      }
      if (strict && never_worse) dominated = true;
    }
    if (!dominated) front.push_back(o);
  }
  return front;
}

std::vector<int> GridDiscretize(std::span<const Rational> payoffs, int k) {
  if (k < 1) throw Error(ErrorCode::kOutOfRange, "grid resolution must be >= 1");
  std::vector<int> cells;
  cells.reserve(payoffs.size());
  for (const Rational& p : payoffs) {
    if (p < 0 || p > 1)
      throw Error(ErrorCode::kOutOfRange, "payoff " + FormatRational(p) + " outside [0,1]");
    // floor(p * k) + 1; p = 1 lands in cell k + 1.
    Rational scaled = p * static_cast<long long>(k);
    cells.push_back(static_cast<int>(scaled.numerator() / scaled.denominator()) + 1);
  }
  return cells;
}

}  // namespace eqsynth
