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
#include <numeric>
#include <random>

#include "doctest.h"
#include "eqsynth/error.hpp"
#include "eqsynth/generators.hpp"
#include "eqsynth/orders.hpp"

namespace eqsynth {
namespace {

PreferenceProfile Profile(int outcomes, std::vector<std::vector<std::vector<Outcome>>> groups) {
  PreferenceProfile p;
  for (int o = 0; o < outcomes; ++o) p.outcomes.push_back(std::string(1, static_cast<char>('x' + o)));
  for (size_t a = 0; a < groups.size(); ++a) {
    p.players.push_back(std::string(1, static_cast<char>('A' + a)));
    p.orders.push_back(StrictWeakOrder::FromGroups(outcomes, groups[a]));
  }
  return p;
}

// Outcome names used below.
constexpr Outcome x = 0, y = 1, z = 2;

TEST_CASE("rationals") {
  CHECK(ParseRational("3/5") == Rational(3, 5));
  CHECK(ParseRational("2") == Rational(2));
  CHECK(ParseRational("-1/4") == Rational(-1, 4));
  CHECK(FormatRational(Rational(6, 10)) == "3/5");
  CHECK(FormatRational(Rational(2)) == "2");
  CHECK_THROWS_AS(ParseRational("a/b"), Error);
  CHECK_THROWS_AS(ParseRational("1/0"), Error);
}

TEST_CASE("strict weak order basics") {
  auto o = StrictWeakOrder::FromGroups(3, {{z}, {x, y}});
  CHECK(o.Less(z, x));
  CHECK_FALSE(o.Less(x, y));
  CHECK(o.NumClasses() == 2);
  CHECK_FALSE(o.IsLinear());
  CHECK(o.Class(1) == std::vector<Outcome>{x, y});
  CHECK(o.Inverse().Less(x, z));
  CHECK(o.Inverse().Inverse() == o);
  CHECK_THROWS_AS(StrictWeakOrder::FromGroups(3, {{z}, {x}}), Error);
  CHECK_THROWS_AS(StrictWeakOrder::FromGroups(2, {{0}, {0, 1}}), Error);
}

TEST_CASE("check_swo examples") {
  auto single = CheckStrictWeakOrder(Relation(1));
  REQUIRE(std::holds_alternative<StrictWeakOrder>(single));
  CHECK(std::get<StrictWeakOrder>(single).NumClasses() == 1);

  Relation cycle(2);
  cycle.Set(0, 1);
  cycle.Set(1, 0);
  auto bad = CheckStrictWeakOrder(cycle);
  REQUIRE(std::holds_alternative<SwoViolation>(bad));
  // x<y<x forces x<x by transitivity; irreflexivity holds, transitivity fails.
  CHECK(std::get<SwoViolation>(bad).axiom == SwoAxiom::kTransitivity);

  Relation one(3);
  one.Set(x, y);
  auto neg = CheckStrictWeakOrder(one);
  REQUIRE(std::holds_alternative<SwoViolation>(neg));
  auto v = std::get<SwoViolation>(neg);
  CHECK(v.axiom == SwoAxiom::kNegativeTransitivity);
  CHECK_FALSE(one.Holds(v.x, v.y));
  CHECK_FALSE(one.Holds(v.y, v.z));
  CHECK(one.Holds(v.x, v.z));

  Relation self(1);
  self.Set(0, 0);
  CHECK(std::get<SwoViolation>(CheckStrictWeakOrder(self)).axiom == SwoAxiom::kIrreflexivity);
}

// R is a strict weak order iff R(x,y) <=> r(x) < r(y) for some r.
bool HasRankFunction(const Relation& rel) {
  const int n = rel.size();
  std::vector<int> r(n, 0);
  for (;;) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) ok = rel.Holds(a, b) == (r[a] < r[b]);
    if (ok) return true;
    int k = 0;
    while (k < n && ++r[k] == n) r[k++] = 0;
    if (k == n) return false;
  }
}

TEST_CASE("property: check_swo matches rank representability on all small relations") {
  for (int n = 0; n <= 3; ++n) {
    for (unsigned bits = 0; bits < (1u << (n * n)); ++bits) {
      Relation rel(n);
      for (int i = 0; i < n * n; ++i)
        if (bits >> i & 1) rel.Set(i / n, i % n);
      auto result = CheckStrictWeakOrder(rel);
      bool accepted = std::holds_alternative<StrictWeakOrder>(result);
      CHECK(accepted == HasRankFunction(rel));
      if (accepted) {
        const auto& order = std::get<StrictWeakOrder>(result);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) CHECK(order.Less(a, b) == rel.Holds(a, b));
      }
    }
  }
}

TEST_CASE("terminal intervals") {
  auto o = StrictWeakOrder::FromGroups(3, {{z}, {y}, {x}});
  CHECK(TerminalInterval(x, o).empty());
  CHECK(TerminalInterval(z, o) == std::vector<Outcome>{x, y});
  // z:0, y:1, y':1, x:2 with y' = 3
  StrictWeakOrder ties(std::vector<int>{2, 1, 0, 1});
  CHECK(TerminalInterval(z, ties) == std::vector<Outcome>{0, 1, 3});
  CHECK(TerminalInterval(1, ties) == std::vector<Outcome>{0});
}

TEST_CASE("forbidden pattern examples") {
  auto p = Profile(3, {{{z}, {y}, {x}}, {{x}, {z}, {y}}});
  auto w = FindForbiddenPattern(p);
  REQUIRE(w);
  CHECK(*w == PatternWitness{0, 1, x, y, z});
  CHECK_FALSE(FindForbiddenPattern(Profile(3, {{{z}, {y}, {x}}, {{z}, {y}, {x}}})));
  CHECK_FALSE(FindForbiddenPattern(Profile(3, {{{z}, {y}, {x}}, {{x}, {y}, {z}}})));
}

// Direct search for the pattern.
bool PatternOracle(const PreferenceProfile& p) {
  for (const auto& a : p.orders)
    for (const auto& b : p.orders)
      for (int i = 0; i < p.NumOutcomes(); ++i)
        for (int j = 0; j < p.NumOutcomes(); ++j)
          for (int k = 0; k < p.NumOutcomes(); ++k)
            if (a.Less(k, j) && a.Less(j, i) && b.Less(i, k) && b.Less(k, j)) return true;
  return false;
}

TEST_CASE("property: inverse linear orders never show the pattern") {
  std::vector<int> perm{0, 1, 2};
  do {
    StrictWeakOrder a(perm);
    PreferenceProfile p{{"A", "B"}, {"x", "y", "z"}, {a, a.Inverse()}};
    CHECK_FALSE(FindForbiddenPattern(p));
    CHECK_FALSE(PatternOracle(p));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("property: pattern detection is invariant under relabeling") {
  gen::Rng rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    int n = gen::Uniform(rng, 1, 4), players = gen::Uniform(rng, 1, 3);
    PreferenceProfile p;
    for (int o = 0; o < n; ++o) p.outcomes.push_back("o" + std::to_string(o));
    for (int a = 0; a < players; ++a) {
      p.players.push_back("P" + std::to_string(a));
      p.orders.push_back(gen::RandomOrder(rng, n));
    }
    bool found = FindForbiddenPattern(p).has_value();
    CHECK(found == PatternOracle(p));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    PreferenceProfile q = p;
    std::shuffle(q.orders.begin(), q.orders.end(), rng);
    for (auto& ord : q.orders) {
      std::vector<int> ranks(n);
      for (int o = 0; o < n; ++o) ranks[perm[o]] = ord.Rank(o);
      ord = StrictWeakOrder(ranks);
    }
    CHECK(FindForbiddenPattern(q).has_value() == found);
  }
}

TEST_CASE("slice partition examples") {
  auto one = ComputeSlicePartition(Profile(1, {{{0}}, {{0}}}));
  CHECK(one.slices == std::vector<std::vector<Outcome>>{{0}});
  auto shared = ComputeSlicePartition(Profile(3, {{{z}, {y}, {x}}, {{z}, {y}, {x}}}));
  CHECK(shared.slices == std::vector<std::vector<Outcome>>{{z}, {y}, {x}});
  auto split = ComputeSlicePartition(Profile(3, {{{z}, {y}, {x}}, {{z}, {x}, {y}}}));
  CHECK(split.slices == std::vector<std::vector<Outcome>>{{z}, {y, x}});
  CHECK(split.aligned[1] == std::vector<bool>{true, false});
  CHECK(split.aligned[0] == std::vector<bool>{true, true});
}

TEST_CASE("slice partition errors") {
  try {
    ComputeSlicePartition(Profile(3, {{{z}, {y}, {x}}, {{x}, {z}, {y}}}));
    FAIL("expected PatternPresent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPatternPresent);
  }
  try {
    ComputeSlicePartition(Profile(2, {{{0, 1}}}));
    FAIL("expected NotLinear");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotLinear);
  }
}

TEST_CASE("property: slice partitions of pattern-free linear profiles") {
  gen::Rng rng(52);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    int n = gen::Uniform(rng, 1, 4), players = gen::Uniform(rng, 1, 3);
    PreferenceProfile p;
    for (int o = 0; o < n; ++o) p.outcomes.push_back("o" + std::to_string(o));
    for (int a = 0; a < players; ++a) {
      p.players.push_back("P" + std::to_string(a));
      p.orders.push_back(gen::RandomLinearOrder(rng, n));
    }
    if (FindForbiddenPattern(p)) continue;
    ++checked;
    SlicePartition part = ComputeSlicePartition(p);
    std::vector<int> seen(n, 0);
    for (const auto& s : part.slices)
      for (Outcome o : s) ++seen[o];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    for (size_t i = 0; i < part.slices.size(); ++i) {
      for (size_t j = i + 1; j < part.slices.size(); ++j)
        for (Outcome lo : part.slices[i])
          for (Outcome hi : part.slices[j])
            for (const auto& ord : p.orders) CHECK(ord.Less(lo, hi));
      const auto& s = part.slices[i];
      for (int a = 0; a < players; ++a)
        for (size_t k = 0; k + 1 < s.size(); ++k) {
          CHECK(p.orders[0].Less(s[k], s[k + 1]));
          CHECK(p.orders[a].Less(s[k], s[k + 1]) == part.aligned[i][a]);
          CHECK(p.orders[a].Less(s[k + 1], s[k]) == !part.aligned[i][a]);
        }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("pareto front examples") {
  auto inverse = Profile(3, {{{z}, {y}, {x}}, {{x}, {y}, {z}}});
  CHECK(ParetoFront(inverse, {x}) == std::vector<Outcome>{x});
  CHECK(ParetoFront(inverse, {x, y, z}) == std::vector<Outcome>{x, y, z});
  auto shared = Profile(3, {{{z}, {y}, {x}}, {{z}, {y}, {x}}});
  CHECK(ParetoFront(shared, {z, y}) == std::vector<Outcome>{y});
  auto rels = shared.Relations();
  CHECK(WeakParetoFront(rels, {z, y}) == std::vector<Outcome>{y});
}

TEST_CASE("property: pareto fronts are non-empty and undominated") {
  gen::Rng rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    int n = gen::Uniform(rng, 1, 5), players = gen::Uniform(rng, 1, 3);
    PreferenceProfile p;
    for (int o = 0; o < n; ++o) p.outcomes.push_back("o" + std::to_string(o));
    for (int a = 0; a < players; ++a) p.orders.push_back(gen::RandomOrder(rng, n));
    std::vector<Outcome> realizable;
    for (int o = 0; o < n; ++o)
      if (gen::Uniform(rng, 0, 1)) realizable.push_back(o);
    if (realizable.empty()) realizable.push_back(0);
    auto front = ParetoFront(p, realizable);
    CHECK_FALSE(front.empty());
    for (Outcome o : front)
      for (Outcome q : realizable) {
        bool up = false, down = false;
        for (const auto& ord : p.orders) up = up || ord.Less(o, q), down = down || ord.Less(q, o);
        CHECK_FALSE((up && !down));
      }
  }
}

TEST_CASE("grid discretization") {
  std::vector<Rational> p{Rational(0), Rational(3, 5), Rational(1)};
  CHECK(GridDiscretize(p, 2) == std::vector<int>{1, 2, 3});
  CHECK(GridDiscretize(std::vector<Rational>{Rational(0)}, 7) == std::vector<int>{1});
  CHECK(GridDiscretize(std::vector<Rational>{Rational(1, 2)}, 2) == std::vector<int>{2});
  CHECK_THROWS_AS(GridDiscretize(std::vector<Rational>{Rational(3, 2)}, 2), Error);
  CHECK_THROWS_AS(GridDiscretize(std::vector<Rational>{Rational(-1, 2)}, 2), Error);
  CHECK_THROWS_AS(GridDiscretize(p, 0), Error);
}

TEST_CASE("property: grid cells contain their payoff and are monotone") {
  gen::Rng rng(54);
  for (int trial = 0; trial < 2000; ++trial) {
    int k = gen::Uniform(rng, 1, 8), den = gen::Uniform(rng, 1, 12);
    Rational a(gen::Uniform(rng, 0, den), den), b(gen::Uniform(rng, 0, den), den);
    std::vector<Rational> pair{a, b};
    auto cells = GridDiscretize(pair, k);
    for (int i = 0; i < 2; ++i) {
      Rational lo(cells[i] - 1, k), hi(cells[i], k);
      CHECK(lo <= pair[i]);
      CHECK((pair[i] < hi || (pair[i] == 1 && cells[i] == k + 1)));
    }
    if (a < b) CHECK(cells[0] <= cells[1]);
    if (b - a > Rational(1, k) || a - b > Rational(1, k)) CHECK(cells[0] != cells[1]);
  }
}

}  // namespace
}  // namespace eqsynth
