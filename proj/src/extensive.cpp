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


#include "eqsynth/extensive.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "eqsynth/error.hpp"

namespace eqsynth {

bool TreeGame::Prefers(int a, int lo, int hi) const {
  if (IsPayoffGame()) return nodes[lo].payoffs[a] < nodes[hi].payoffs[a];
  return prefs[a].Holds(nodes[lo].outcome, nodes[hi].outcome);
}

std::vector<int> TreeGame::Leaves() const {
  std::vector<int> out;
  for (int n = 0; n < NumNodes(); ++n)
    if (IsLeaf(n)) out.push_back(n);
  return out;
}

void ValidateTree(const TreeGame& tree) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kInvalidInput, msg); };
  if (tree.nodes.empty()) fail("tree has no nodes");
  if (tree.players.empty()) fail("tree has no players");
  const bool payoff = tree.IsPayoffGame();
  if (!payoff) {
    if (static_cast<int>(tree.prefs.size()) != tree.NumPlayers())
      fail("one preference per player expected");
    for (const auto& r : tree.prefs)
      if (r.size() != static_cast<int>(tree.outcomes.size()))
        fail("preference over the wrong outcome set");
  }
  std::vector<int> parents(tree.nodes.size(), 0);
  for (int n = 0; n < tree.NumNodes(); ++n) {
    const TreeNode& node = tree.nodes[n];
    const std::string where = "node " + std::to_string(n);
    if (node.owner >= 0) {
      if (node.owner >= tree.NumPlayers()) fail(where + ": unknown owner");
      if (node.children.empty()) fail(where + ": internal node without children");
      for (int c : node.children) {
        if (c <= n || c >= tree.NumNodes()) fail(where + ": bad child index");
        ++parents[c];
      }
    } else {
      if (!node.children.empty()) fail(where + ": leaf with children");
      if (payoff) {
        if (static_cast<int>(node.payoffs.size()) != tree.NumPlayers())
          fail(where + ": one payoff per player expected");
      } else if (node.outcome < 0 || node.outcome >= static_cast<int>(tree.outcomes.size())) {
        fail(where + ": unknown outcome");
      }
    }
  }
  for (int n = 1; n < tree.NumNodes(); ++n)
    if (parents[n] != 1) fail("node " + std::to_string(n) + " is not reached exactly once");
}

int PlayLeaf(const TreeGame& tree, const TreeProfile& profile, int from) {
  int n = from;
  while (!tree.IsLeaf(n)) n = tree.nodes[n].children[profile[n]];
  return n;
}

std::vector<int> DeviationLeaves(const TreeGame& tree, const TreeProfile& profile, int player,
                                 int from) {
  std::vector<int> out;
  std::vector<int> stack{from};
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    const TreeNode& node = tree.nodes[n];
    if (node.owner < 0) {
      out.push_back(n);
    } else if (node.owner == player) {
      for (int c : node.children) stack.push_back(c);
    } else {
      stack.push_back(node.children[profile[n]]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<TreeDeviation> FindTreeDeviation(const TreeGame& tree, const TreeProfile& profile,
                                               int from) {
  const int current = PlayLeaf(tree, profile, from);
  for (int a = 0; a < tree.NumPlayers(); ++a)
    for (int leaf : DeviationLeaves(tree, profile, a, from))
      if (tree.Prefers(a, current, leaf)) return TreeDeviation{a, leaf};
  return std::nullopt;
}

bool IsTreeNash(const TreeGame& tree, const TreeProfile& profile, int from) {
  return !FindTreeDeviation(tree, profile, from).has_value();
}

bool IsTreeSubgamePerfect(const TreeGame& tree, const TreeProfile& profile) {
  for (int n = 0; n < tree.NumNodes(); ++n)
    if (!tree.IsLeaf(n) && !IsTreeNash(tree, profile, n)) return false;
  return true;
}

InductionResult BackwardInduction(const TreeGame& tree) {
  ValidateTree(tree);
  if (!tree.IsPayoffGame()) {
    for (int a = 0; a < tree.NumPlayers(); ++a)
      if (std::holds_alternative<SwoViolation>(CheckStrictWeakOrder(tree.prefs[a])))
        throw Error(ErrorCode::kInvalidInput,
                    "preference of " + tree.players[a] + " is not a strict weak order");
  }
  InductionResult r;
  r.profile.assign(tree.nodes.size(), -1);
  r.leaf.assign(tree.nodes.size(), -1);
  for (int n = tree.NumNodes() - 1; n >= 0; --n) {
    const TreeNode& node = tree.nodes[n];
    if (node.owner < 0) {
      r.leaf[n] = n;
      continue;
    }
    int best = 0;
    for (int i = 1; i < static_cast<int>(node.children.size()); ++i)
      if (tree.Prefers(node.owner, r.leaf[node.children[best]], r.leaf[node.children[i]]))
        best = i;
    r.profile[n] = best;
    r.leaf[n] = r.leaf[node.children[best]];
  }
  return r;
}

long long CountProfiles(const TreeGame& tree) {
  long long count = 1;
  for (const auto& node : tree.nodes) {
    if (node.owner < 0) continue;
    count *= static_cast<long long>(node.children.size());
    if (count > (1LL << 40)) return 1LL << 40;
  }
  return count;
}

std::vector<int> EnumerateNeLeaves(const TreeGame& tree, long long cap) {
  ValidateTree(tree);
  if (CountProfiles(tree) > cap)
    throw Error(ErrorCode::kCapExceeded, "too many strategy profiles to enumerate");
  std::vector<int> internal;
  for (int n = 0; n < tree.NumNodes(); ++n)
    if (!tree.IsLeaf(n)) internal.push_back(n);
  TreeProfile profile(tree.nodes.size(), -1);
  for (int n : internal) profile[n] = 0;
  std::set<int> found;
  for (;;) {
    if (IsTreeNash(tree, profile)) found.insert(PlayLeaf(tree, profile));
    size_t i = 0;
    for (; i < internal.size(); ++i) {
      int n = internal[i];
      if (++profile[n] < static_cast<int>(tree.nodes[n].children.size())) break;
      profile[n] = 0;
    }
    if (i == internal.size()) break;
  }
  return {found.begin(), found.end()};
}

std::vector<Outcome> EnumerateNeOutcomes(const TreeGame& tree, long long cap) {
  if (tree.IsPayoffGame())
    throw Error(ErrorCode::kInvalidInput, "payoff trees have no outcome labels");
  std::set<Outcome> out;
  for (int leaf : EnumerateNeLeaves(tree, cap)) out.insert(tree.nodes[leaf].outcome);
  return {out.begin(), out.end()};
}

TreeGame Subtree(const TreeGame& tree, int node) {
  TreeGame sub = tree;
  sub.nodes.clear();
  std::vector<int> index(tree.nodes.size(), -1);
  // Preorder keeps children after parents.
  std::function<void(int)> copy = [&](int n) {
    index[n] = static_cast<int>(sub.nodes.size());
    sub.nodes.push_back(tree.nodes[n]);
    for (int c : tree.nodes[n].children) copy(c);
  };
  copy(node);
  for (auto& n : sub.nodes)
    for (int& c : n.children) c = index[c];
  return sub;
}

std::vector<Outcome> TreeRealizableOutcomes(const TreeGame& tree) {
  std::set<Outcome> out;
  for (int leaf : tree.Leaves()) out.insert(tree.nodes[leaf].outcome);
  return {out.begin(), out.end()};
}

bool HasParetoOptimalNe(const TreeGame& tree, long long cap) {
  auto front = ParetoFront(tree.prefs, TreeRealizableOutcomes(tree));
  for (Outcome o : EnumerateNeOutcomes(tree, cap))
    if (std::find(front.begin(), front.end(), o) != front.end()) return true;
  return false;
}

Rational MaxDeviationGain(const TreeGame& tree, const TreeProfile& profile, int from) {
  const int current = PlayLeaf(tree, profile, from);
  Rational best(0);
  for (int a = 0; a < tree.NumPlayers(); ++a)
    for (int leaf : DeviationLeaves(tree, profile, a, from))
      best = std::max(best, tree.nodes[leaf].payoffs[a] - tree.nodes[current].payoffs[a]);
  return best;
}

EpsilonGridResult EpsilonGridGame(const TreeGame& tree, int k) {
  ValidateTree(tree);
  if (!tree.IsPayoffGame()) throw Error(ErrorCode::kInvalidInput, "payoff tree expected");
  EpsilonGridResult r;
  r.index_game = tree;
  for (auto& node : r.index_game.nodes) {
    if (node.owner >= 0) continue;
    std::vector<int> cells = GridDiscretize(node.payoffs, k);
    for (size_t a = 0; a < cells.size(); ++a) node.payoffs[a] = Rational(cells[a]);
  }
  r.certificate.k = k;
  r.certificate.profile = BackwardInduction(r.index_game).profile;
  r.certificate.max_gain = MaxDeviationGain(tree, r.certificate.profile);
  r.certificate.holds = r.certificate.max_gain <= Rational(1, k);
  return r;
}

namespace {

int AddNode(TreeGame& t, int owner) {
  TreeNode node;
  node.owner = owner;
  t.nodes.push_back(node);
  return t.NumNodes() - 1;
}

int AddLeaf(TreeGame& t, Outcome o) {
  TreeNode node;
  node.outcome = o;
  t.nodes.push_back(node);
  return t.NumNodes() - 1;
}

int AddPayoffLeaf(TreeGame& t, std::vector<Rational> payoffs) {
  TreeNode node;
  node.payoffs = std::move(payoffs);
  t.nodes.push_back(node);
  return t.NumNodes() - 1;
}

void CheckDepth(int depth, int lo, int hi) {
  if (depth < lo || depth > hi)
    throw Error(ErrorCode::kOutOfRange, "depth must lie in " + std::to_string(lo) + ".." +
                                            std::to_string(hi));
}

}  // namespace

TreeGame NonashTruncation(int depth) {
  CheckDepth(depth, 1, 1000);
  TreeGame t;
  t.players = {"a"};
  std::vector<int> spine;
  for (int j = 0; j < depth; ++j) {
    if (j > 0) t.nodes[spine.back()].children.push_back(t.NumNodes());
    spine.push_back(AddNode(t, 0));
  }
  int tail = AddPayoffLeaf(t, {Rational(0)});
  t.nodes[spine.back()].children.push_back(tail);
  for (int j = 0; j < depth; ++j) {
    int exit = AddPayoffLeaf(t, {Rational(j, j + 1)});
    t.nodes[spine[j]].children.push_back(exit);
  }
  return t;
}

TreeGame EscapeTruncation(int depth) {
  CheckDepth(depth, 2, 1000);
  TreeGame t;
  t.players = {"a", "b"};
  t.outcomes = {"x", "y", "z"};
  const Outcome x = 0, y = 1, z = 2;
  t.prefs = {Relation::Closure(3, {{z, y}, {y, x}}), Relation::Closure(3, {{x, z}, {z, y}})};
  std::vector<int> spine;
  for (int j = 0; j < depth; ++j) {
    if (j > 0) t.nodes[spine.back()].children.push_back(t.NumNodes());
    spine.push_back(AddNode(t, j % 2));
  }
  int tail = AddLeaf(t, x);
  t.nodes[spine.back()].children.push_back(tail);
  for (int j = 0; j < depth; ++j) {
    int exit = AddLeaf(t, j % 2 == 0 ? y : z);
    t.nodes[spine[j]].children.push_back(exit);
  }
  return t;
}

TreeGame UscTruncation(int depth) {
  CheckDepth(depth, 2, 60);
  TreeGame t;
  t.players = {"a", "b"};
  std::vector<int> spine;
  for (int j = 0; j < depth; ++j) {
    if (j > 0) t.nodes[spine.back()].children.push_back(t.NumNodes());
    spine.push_back(AddNode(t, j % 2));
  }
  int tail = AddPayoffLeaf(t, {Rational(2), Rational(0)});
  t.nodes[spine.back()].children.push_back(tail);
  for (int j = 0; j < depth; ++j) {
    const long long n = j / 2;
    int exit = j % 2 == 0 ? AddPayoffLeaf(t, {Rational(1, 1LL << n), Rational(1, 1LL << n)})
                          : AddPayoffLeaf(t, {Rational(0), Rational(1, 1LL << (n + 2))});
    t.nodes[spine[j]].children.push_back(exit);
  }
  return t;
}

TreeGame ThreeLeafGame(const std::vector<std::string>& players,
                       const std::vector<std::string>& outcomes,
                       const std::vector<Relation>& prefs, int root, Outcome x, Outcome y,
                       Outcome z) {
  if (players.size() != 2) throw Error(ErrorCode::kInvalidInput, "two players expected");
  TreeGame t;
  t.players = players;
  t.outcomes = outcomes;
  t.prefs = prefs;
  int r = AddNode(t, root);
  int inner = AddNode(t, 1 - root);
  t.nodes[r].children.push_back(inner);
  int lx = AddLeaf(t, x), ly = AddLeaf(t, y), lz = AddLeaf(t, z);
  t.nodes[inner].children = {lx, ly};
  t.nodes[r].children.push_back(lz);
  ValidateTree(t);
  return t;
}

TreeGame ThreeLeafGame(const PreferenceProfile& prefs, int root, Outcome x, Outcome y,
                       Outcome z) {
  return ThreeLeafGame(prefs.players, prefs.outcomes, prefs.Relations(), root, x, y, z);
}

bool TemplateHasParetoNe(const PreferenceProfile& prefs) {
  if (prefs.NumOutcomes() != 3) throw Error(ErrorCode::kInvalidInput, "three outcomes expected");
  std::vector<Outcome> perm{0, 1, 2};
  for (int root = 0; root < 2; ++root) {
    std::sort(perm.begin(), perm.end());
    do {
      if (!HasParetoOptimalNe(ThreeLeafGame(prefs, root, perm[0], perm[1], perm[2])))
        return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

TreeGame SixOutcomeExample() {
  TreeGame t;
  t.players = {"a", "b"};
  t.outcomes = {"x", "y", "z", "alpha", "beta", "gamma"};
  const Outcome x = 0, y = 1, z = 2, al = 3, be = 4, ga = 5;
  t.prefs = {Relation::Closure(6, {{ga, y}, {y, x}, {z, be}, {be, al}}),
             Relation::Closure(6, {{x, z}, {z, y}, {al, ga}, {ga, be}})};
  int root = AddNode(t, 1);
  int inner = AddNode(t, 0);
  std::vector<int> low{AddLeaf(t, x), AddLeaf(t, y), AddLeaf(t, al), AddLeaf(t, be)};
  t.nodes[inner].children = low;
  int lz = AddLeaf(t, z), lg = AddLeaf(t, ga);
  t.nodes[root].children = {inner, lz, lg};
  return t;
}

TreeGame FourOutcomeExample() {
  TreeGame t;
  t.players = {"a", "b"};
  t.outcomes = {"x", "y", "z", "t"};
  const Outcome x = 0, y = 1, z = 2, tt = 3;
  t.prefs = {Relation::FromOrder(StrictWeakOrder::FromGroups(4, {{z, tt}, {x, y}})),
             Relation::Closure(4, {{x, z}, {z, y}, {y, tt}})};
  int root = AddNode(t, 1);
  int a = AddNode(t, 0);
  int inner = AddNode(t, 1);
  int lt = AddLeaf(t, tt), ly = AddLeaf(t, y), lx = AddLeaf(t, x), lz = AddLeaf(t, z);
  t.nodes[inner].children = {lt, ly};
  t.nodes[a].children = {inner, lx};
  t.nodes[root].children = {a, lz};
  return t;
}

std::string ToDot(const TreeGame& tree) {
  std::ostringstream out;
  out << "digraph tree {\n";
  for (int n = 0; n < tree.NumNodes(); ++n) {
    const TreeNode& node = tree.nodes[n];
    out << "  n" << n << " [label=\"";
    if (node.owner >= 0) {
      out << tree.players[node.owner] << "\"];\n";
      continue;
    }
    if (tree.IsPayoffGame()) {
      out << "(";
      for (size_t a = 0; a < node.payoffs.size(); ++a)
        out << (a ? ", " : "") << FormatRational(node.payoffs[a]);
      out << ")";
    } else {
      out << tree.outcomes[node.outcome];
    }
    out << "\", shape=box];\n";
  }
  for (int n = 0; n < tree.NumNodes(); ++n)
    for (int c : tree.nodes[n].children) out << "  n" << n << " -> n" << c << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace eqsynth
