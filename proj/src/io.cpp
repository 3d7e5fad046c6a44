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


#include "eqsynth/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace eqsynth::io {
namespace {

[[noreturn]] void Fail(const std::string& msg) { throw Error(ErrorCode::kInvalidInput, msg); }

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) Fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string Str(const Json& j, const std::string& what) {
  if (!j.is_string()) Fail(what + " must be a string");
  return j.get<std::string>();
}

long long Int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) Fail(what + " must be an integer");
  return j.get<long long>();
}

std::vector<std::string> Strings(const Json& j, const std::string& what) {
  if (!j.is_array()) Fail(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(Str(e, what + " entry"));
  return out;
}

Player PlayerOf(const Arena& arena, const std::string& name) {
  auto p = arena.FindPlayer(name);
  if (!p) Fail("unknown player " + name);
  return *p;
}

int IndexIn(const std::vector<std::string>& names, const std::string& name,
            const std::string& what) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) Fail("unknown " + what + " " + name);
  return static_cast<int>(it - names.begin());
}

void CheckDistinct(const std::vector<std::string>& names, const std::string& what) {
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) Fail("duplicate " + what);
}

std::string PlayerLabel(const Arena& arena, int player) {
  return player >= 0 && player < arena.NumPlayers() ? arena.PlayerName(player) : "coalition";
}

}  // namespace

InvalidArena::InvalidArena(std::vector<ArenaIssue> issues)
    : Error(issues.empty() ? ErrorCode::kInvalidInput : issues.front().code,
            issues.empty() ? "invalid arena" : issues.front().detail),
      issues_(std::move(issues)) {}

Json ParseText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    Fail(std::string("malformed JSON: ") + e.what());
  }
}

Json ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseText(buf.str());
}

RawArena RawArenaFromJson(const Json& j) {
  RawArena raw;
  raw.players = Strings(Field(j, "players"), "players");
  const Json& vs = Field(j, "vertices");
  if (!vs.is_array()) Fail("vertices must be an array");
  for (const auto& v : vs)
    raw.vertices.push_back({Str(Field(v, "id"), "vertex id"), Str(Field(v, "owner"), "owner")});
  const Json& es = Field(j, "edges");
  if (!es.is_array()) Fail("edges must be an array");
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) Fail("an edge is a pair [src, dst]");
    raw.edges.emplace_back(Str(e[0], "edge end"), Str(e[1], "edge end"));
  }
  if (j.contains("start")) raw.start = Str(j.at("start"), "start");
  return raw;
}

Arena ArenaFromJson(const Json& j) {
  ArenaCheck check = ValidateArena(RawArenaFromJson(j));
  if (!check.arena) throw InvalidArena(check.issues);
  return *check.arena;
}

Json ToJson(const Arena& arena) {
  RawArena raw = arena.ToRaw();
  Json vs = Json::array();
  for (const auto& v : raw.vertices) vs.push_back({{"id", v.id}, {"owner", v.owner}});
  Json es = Json::array();
  for (const auto& [a, b] : raw.edges) es.push_back({a, b});
  return {{"players", raw.players}, {"vertices", vs}, {"edges", es}, {"start", raw.start}};
}

bool HasEnergy(const Json& j) { return j.is_object() && j.contains("energy"); }

EnergySpec EnergyFromJson(const Json& j, const Arena& arena) {
  const Json& e = Field(j, "energy");
  const int players = arena.NumPlayers(), n = arena.NumVertices();
  EnergySpec spec;
  spec.weight.assign(players, std::vector<long long>(n, 0));
  spec.caps.assign(players, {0, 0});
  spec.priority.assign(n, 0);
  spec.wants_even.assign(players, true);
  if (e.contains("weights")) {
    for (const auto& [name, table] : e.at("weights").items()) {
      Player p = PlayerOf(arena, name);
      for (const auto& [vid, w] : table.items()) spec.weight[p][arena.IndexOf(vid)] = Int(w, "weight");
    }
  }
  const Json& caps = Field(e, "caps");
  for (int p = 0; p < players; ++p) {
    const std::string& name = arena.PlayerName(p);
    if (!caps.contains(name)) Fail("missing caps for " + name);
    const Json& c = caps.at(name);
    if (!c.is_array() || c.size() != 2) Fail("caps are [min, max]");
    spec.caps[p] = {Int(c[0], "cap"), Int(c[1], "cap")};
    if (spec.caps[p].first > 0 || spec.caps[p].second < 0)
      Fail("caps of " + name + " must satisfy min <= 0 <= max");
  }
  if (e.contains("priorities"))
    for (const auto& [vid, pr] : e.at("priorities").items()) {
      long long v = Int(pr, "priority");
      if (v < 0) Fail("priorities are natural numbers");
      spec.priority[arena.IndexOf(vid)] = static_cast<int>(v);
    }
  if (e.contains("parity_goal"))
    for (const auto& [name, goal] : e.at("parity_goal").items()) {
      std::string g = Str(goal, "parity goal");
      if (g != "even" && g != "odd") Fail("parity goal is \"even\" or \"odd\"");
      spec.wants_even[PlayerOf(arena, name)] = g == "even";
    }
  return spec;
}

VertexSet VertexSetFromJson(const Json& j, const Arena& arena) {
  std::set<Vertex> out;
  for (const auto& id : Strings(j, "vertex set")) out.insert(arena.IndexOf(id));
  return {out.begin(), out.end()};
}

Json ToJson(const VertexSet& set, const Arena& arena) {
  Json out = Json::array();
  for (Vertex v : set) out.push_back(arena.Id(v));
  return out;
}

Json ToJson(const Lasso& lasso, const Arena& arena) {
  return {{"stem", ToJson(VertexSet(lasso.stem), arena)},
          {"cycle", ToJson(VertexSet(lasso.cycle), arena)}};
}

Objective ObjectiveFromJson(const Json& j, const Arena& arena) {
  if (!j.is_object() || j.size() != 1) Fail("objective needs exactly one of parity/muller/reach/safe");
  if (j.contains("parity")) {
    Parity par{std::vector<int>(arena.NumVertices(), -1)};
    for (const auto& [vid, pr] : j.at("parity").items()) {
      long long v = Int(pr, "priority");
      if (v < 0) Fail("priorities are natural numbers");
      par.priority[arena.IndexOf(vid)] = static_cast<int>(v);
    }
    for (Vertex v = 0; v < arena.NumVertices(); ++v)
      if (par.priority[v] < 0) Fail("no priority for " + arena.Id(v));
    return par;
  }
  if (j.contains("muller")) {
    Muller m;
    if (!j.at("muller").is_array()) Fail("muller family must be an array");
    for (const auto& set : j.at("muller")) m.family.push_back(VertexSetFromJson(set, arena));
    std::sort(m.family.begin(), m.family.end());
    m.family.erase(std::unique(m.family.begin(), m.family.end()), m.family.end());
    return m;
  }
  if (j.contains("reach")) return Reachability{VertexSetFromJson(j.at("reach"), arena)};
  if (j.contains("safe")) return Safety{VertexSetFromJson(j.at("safe"), arena)};
  Fail("unknown objective kind");
}

WinLoseGame WinLoseGameFromJson(const Json& j) {
  Arena arena = ArenaFromJson(j);
  Objective objective = ObjectiveFromJson(Field(j, "objective"), arena);
  WinLoseGame game;
  if (j.contains("side0")) {
    game.arena = arena;
    game.objective = objective;
    game.side0.assign(arena.NumVertices(), 0);
    for (Vertex v : VertexSetFromJson(j.at("side0"), arena)) game.side0[v] = 1;
  } else {
    std::string who = j.contains("protagonist") ? Str(j.at("protagonist"), "protagonist")
                                                : arena.PlayerName(0);
    game = WinLoseGame::ForPlayer(arena, PlayerOf(arena, who), objective);
  }
  ValidateGame(game);
  return game;
}

Json ToJson(const SolveResult& result, const Arena& arena) {
  return {{"win0", ToJson(result.win0, arena)},
          {"win1", ToJson(result.win1, arena)},
          {"strategy0", ToJson(result.strategy0, arena, "side0")},
          {"strategy1", ToJson(result.strategy1, arena, "side1")},
          {"memory_bits_used", result.memory_bits_used}};
}

PreferenceProfile PreferencesFromJson(const Json& j, const std::vector<std::string>& players,
                                      const std::vector<std::string>& outcomes) {
  if (!j.is_object()) Fail("preferences must be an object keyed by player");
  PreferenceProfile prefs;
  prefs.players = players;
  prefs.outcomes = outcomes;
  for (const auto& name : players) {
    if (!j.contains(name)) Fail("no preference for " + name);
    const Json& groups = j.at(name);
    if (!groups.is_array()) Fail("preference of " + name + " must be rank groups");
    std::vector<std::vector<Outcome>> g;
    for (const auto& group : groups) {
      g.emplace_back();
      for (const auto& o : Strings(group, "rank group")) g.back().push_back(IndexIn(outcomes, o, "outcome"));
    }
    try {
      prefs.orders.push_back(StrictWeakOrder::FromGroups(static_cast<int>(outcomes.size()), g));
    } catch (const Error& e) {
      Fail("preference of " + name + ": " + e.what());
    }
  }
  if (j.size() != players.size()) Fail("preferences name unknown players");
  return prefs;
}

Json ToJson(const PreferenceProfile& prefs) {
  Json out = Json::object();
  for (int p = 0; p < prefs.NumPlayers(); ++p) {
    Json groups = Json::array();
    for (const auto& group : prefs.orders[p].Groups()) {
      Json g = Json::array();
      for (Outcome o : group) g.push_back(prefs.outcomes[o]);
      groups.push_back(g);
    }
    out[prefs.players[p]] = groups;
  }
  return out;
}

GraphGame GraphGameFromJson(const Json& j) {
  GraphGame game;
  game.arena = ArenaFromJson(j);
  std::vector<std::string> outcomes = Strings(Field(j, "outcomes"), "outcomes");
  if (outcomes.empty()) Fail("no outcomes");
  CheckDistinct(outcomes, "outcomes");
  std::map<VertexSet, Outcome> table;
  const Json& map = Field(j, "outcome_map");
  if (!map.is_array()) Fail("outcome_map must be an array");
  for (const auto& entry : map) {
    VertexSet inf = VertexSetFromJson(Field(entry, "inf"), game.arena);
    Outcome o = IndexIn(outcomes, Str(Field(entry, "outcome"), "outcome"), "outcome");
    if (!table.emplace(inf, o).second) Fail("inf-set listed twice in outcome_map");
  }
  std::optional<Outcome> fallback;
  if (j.contains("default_outcome"))
    fallback = IndexIn(outcomes, Str(j.at("default_outcome"), "default_outcome"), "outcome");
  game.outcomes = OutcomeMap::Explicit(std::move(table), fallback);
  game.prefs = PreferencesFromJson(Field(j, "preferences"), game.arena.Players(), outcomes);
  ValidateGraphGame(game);
  return game;
}

Json ToJson(const GraphGame& game) {
  if (!game.outcomes.IsExplicit())
    throw Error(ErrorCode::kInvalidInput, "only explicit outcome maps serialize");
  Json doc = ToJson(game.arena);
  Json map = Json::array();
  for (const auto& [inf, o] : game.outcomes.table())
    map.push_back({{"inf", ToJson(inf, game.arena)}, {"outcome", game.prefs.outcomes[o]}});
  doc["outcomes"] = game.prefs.outcomes;
  doc["outcome_map"] = map;
  if (game.outcomes.fallback()) doc["default_outcome"] = game.prefs.outcomes[*game.outcomes.fallback()];
  doc["preferences"] = ToJson(game.prefs);
  return doc;
}

Json ToJson(const StrategyMachine& machine, const Arena& arena) {
  return ToJson(machine, arena, PlayerLabel(arena, machine.player()));
}

Json ToJson(const StrategyMachine& machine, const Arena& arena, const std::string& owner) {
  Json update = Json::object(), choice = Json::object();
  for (Vertex v = 0; v < arena.NumVertices(); ++v) {
    Json u = Json::array(), c = Json::array();
    for (int q = 0; q < machine.NumStates(); ++q) {
      u.push_back(machine.Update(v, q));
      if (machine.Controls(v)) c.push_back(arena.Id(machine.Choice(v, q)));
    }
    update[arena.Id(v)] = u;
    if (machine.Controls(v)) choice[arena.Id(v)] = c;
  }
  return {{"player", owner},
          {"states", machine.NumStates()},
          {"memory_bits", machine.MemoryBits()},
          {"init", 0},
          {"update", update},
          {"choice", choice}};
}

StrategyMachine MachineFromJson(const Json& j, const Arena& arena, int player) {
  long long states = j.contains("states") ? Int(j.at("states"), "states") : 1;
  if (states < 1 || states > (1 << 20)) Fail("states must lie in 1..2^20");
  if (j.contains("init") && Int(j.at("init"), "init") != 0) Fail("init must be state 0");
  StrategyMachine m(player, arena.NumVertices(), static_cast<int>(states));
  if (j.contains("update")) {
    for (const auto& [vid, row] : j.at("update").items()) {
      Vertex v = arena.IndexOf(vid);
      if (!row.is_array() || static_cast<long long>(row.size()) != states)
        Fail("update row of " + vid + " needs one entry per state");
      for (int q = 0; q < states; ++q) {
        long long next = Int(row[q], "update");
        if (next < 0 || next >= states) Fail("update of " + vid + " leaves the state range");
        m.SetUpdate(v, q, static_cast<int>(next));
      }
    }
  }
  for (const auto& [vid, row] : Field(j, "choice").items()) {
    Vertex v = arena.IndexOf(vid);
    if (!row.is_array() || static_cast<long long>(row.size()) != states)
      Fail("choice row of " + vid + " needs one entry per state");
    m.SetControls(v, true);
    for (int q = 0; q < states; ++q) m.SetChoice(v, q, arena.IndexOf(Str(row[q], "choice")));
  }
  if (!m.IsValidFor(arena)) Fail("machine moves along a missing edge");
  return m;
}

Json ToJson(const StrategyProfile& profile, const Arena& arena) {
  Json machines = Json::object();
  for (const auto& m : profile.machines) machines[PlayerLabel(arena, m.player())] = ToJson(m, arena);
  return {{"machines", machines}};
}

StrategyProfile ProfileFromJson(const Json& j, const Arena& arena) {
  const Json& machines = Field(j, "machines");
  if (!machines.is_object()) Fail("machines must be an object keyed by player");
  if (machines.size() != static_cast<size_t>(arena.NumPlayers()))
    Fail("profile players do not match the game's players");
  StrategyProfile profile;
  for (Player p = 0; p < arena.NumPlayers(); ++p) {
    const std::string& name = arena.PlayerName(p);
    if (!machines.contains(name)) Fail("profile players do not match the game's players");
    StrategyMachine m = MachineFromJson(machines.at(name), arena, p);
    for (Vertex v = 0; v < arena.NumVertices(); ++v)
      if (m.Controls(v) != (arena.Owner(v) == p))
        Fail("machine of " + name + " must choose exactly at its own vertices");
    profile.machines.push_back(std::move(m));
  }
  return profile;
}

Json ToJson(const SynthesisReport& report, const GraphGame& game) {
  const Arena& arena = game.arena;
  Json bits = Json::object();
  for (size_t p = 0; p < report.bits.size(); ++p) bits[arena.PlayerName(p)] = report.bits[p];
  Json punish = Json::array();
  for (const auto& e : report.punishments) {
    Json cls = Json::array();
    for (Outcome o : game.Order(e.deviator).Class(e.rank)) cls.push_back(game.prefs.outcomes[o]);
    punish.push_back({{"deviator", arena.PlayerName(e.deviator)},
                      {"vertex", arena.Id(e.vertex)},
                      {"rank", e.rank},
                      {"class", cls}});
  }
  return {{"machines", ToJson(report.profile, arena)["machines"]},
          {"main_lasso", ToJson(report.main_lasso, arena)},
          {"outcome", game.prefs.outcomes[report.outcome]},
          {"bits", bits},
          {"bound", report.bound},
          {"m", report.m},
          {"n", report.n},
          {"K", report.K},
          {"punishments", punish}};
}

Json ToJson(const DeviationWitness& w, const GraphGame& game) {
  return {{"player", game.arena.PlayerName(w.player)},
          {"vertex", game.arena.Id(w.vertex)},
          {"machine", ToJson(w.machine, game.arena)},
          {"play", ToJson(w.play, game.arena)},
          {"improved", game.prefs.outcomes[w.improved]},
          {"induced", game.prefs.outcomes[w.induced]}};
}

Json ToJson(const SpeFailure& f, const GraphGame& game) {
  return {{"vertex", game.arena.Id(f.vertex)},
          {"memory", f.memory},
          {"deviation", ToJson(f.deviation, game)}};
}

Json ToJson(const GuaranteeTable& table, const GraphGame& game) {
  Json g = Json::object();
  for (Player a = 0; a < game.arena.NumPlayers(); ++a) {
    Json row = Json::object();
    for (Vertex v = 0; v < game.arena.NumVertices(); ++v)
      row[game.arena.Id(v)] = game.prefs.outcomes[table.Representative(game, a, v)];
    g[game.arena.PlayerName(a)] = row;
  }
  return {{"guarantees", g}, {"n", table.n}, {"K", table.K}, {"m", table.m}};
}

Json ToJson(const PatternWitness& w, const PreferenceProfile& prefs) {
  return {{"a", prefs.players[w.a]},
          {"b", prefs.players[w.b]},
          {"x", prefs.outcomes[w.x]},
          {"y", prefs.outcomes[w.y]},
          {"z", prefs.outcomes[w.z]}};
}

TreeGame TreeFromJson(const Json& j) {
  TreeGame t;
  t.players = Strings(Field(j, "players"), "players");
  if (t.players.empty()) Fail("no players");
  CheckDistinct(t.players, "players");
  if (j.contains("outcomes")) {
    t.outcomes = Strings(j.at("outcomes"), "outcomes");
    if (t.outcomes.empty()) Fail("no outcomes");
    CheckDistinct(t.outcomes, "outcomes");
    const Json& prefs = Field(j, "preferences");
    const int n = static_cast<int>(t.outcomes.size());
    for (const auto& name : t.players) {
      if (!prefs.contains(name)) Fail("no preference for " + name);
      const Json& p = prefs.at(name);
      if (p.is_object()) {
        std::vector<std::pair<Outcome, Outcome>> pairs;
        for (const auto& pair : Field(p, "less")) {
          auto names = Strings(pair, "pair");
          if (names.size() != 2) Fail("a preference pair is [worse, better]");
          pairs.emplace_back(IndexIn(t.outcomes, names[0], "outcome"),
                             IndexIn(t.outcomes, names[1], "outcome"));
        }
        t.prefs.push_back(Relation::Closure(n, pairs));
      } else {
        Json single = {{name, p}};
        t.prefs.push_back(Relation::FromOrder(PreferencesFromJson(single, {name}, t.outcomes).orders[0]));
      }
    }
  }
  std::function<void(const Json&, int)> add = [&](const Json& node, int depth) {
    if (depth > 10000) Fail("tree too deep");
    if (!node.is_object()) Fail("tree nodes are objects");
    const int index = t.NumNodes();
    t.nodes.emplace_back();
    if (node.contains("children")) {
      t.nodes[index].owner = IndexIn(t.players, Str(Field(node, "owner"), "owner"), "player");
      const Json& kids = node.at("children");
      if (!kids.is_array() || kids.empty()) Fail("internal nodes need children");
      for (const auto& child : kids) {
        int c = t.NumNodes();
        t.nodes[index].children.push_back(c);
        add(child, depth + 1);
      }
    } else if (node.contains("outcome")) {
      if (t.IsPayoffGame()) Fail("outcome leaf in a tree without outcomes");
      t.nodes[index].outcome = IndexIn(t.outcomes, Str(node.at("outcome"), "outcome"), "outcome");
    } else {
      if (!t.IsPayoffGame()) Fail("payoff leaf in a tree with outcomes");
      const Json& pay = Field(node, "payoffs");
      std::vector<Rational> values;
      for (const auto& name : t.players) {
        if (!pay.contains(name)) Fail("no payoff for " + name);
        values.push_back(ParseRational(Str(pay.at(name), "payoff")));
      }
      t.nodes[index].payoffs = std::move(values);
    }
  };
  add(Field(j, "tree"), 0);
  ValidateTree(t);
  return t;
}

Json ToJson(const TreeGame& t) {
  std::function<Json(int)> node = [&](int n) -> Json {
    const TreeNode& nd = t.nodes[n];
    if (nd.owner >= 0) {
      Json kids = Json::array();
      for (int c : nd.children) kids.push_back(node(c));
      return {{"owner", t.players[nd.owner]}, {"children", kids}};
    }
    if (!t.IsPayoffGame()) return {{"outcome", t.outcomes[nd.outcome]}};
    Json pay = Json::object();
    for (int a = 0; a < t.NumPlayers(); ++a) pay[t.players[a]] = FormatRational(nd.payoffs[a]);
    return {{"payoffs", pay}};
  };
  Json out = {{"players", t.players}, {"tree", node(0)}};
  if (!t.IsPayoffGame()) {
    out["outcomes"] = t.outcomes;
    Json prefs = Json::object();
    for (int a = 0; a < t.NumPlayers(); ++a) {
      auto swo = CheckStrictWeakOrder(t.prefs[a]);
      if (auto* order = std::get_if<StrictWeakOrder>(&swo)) {
        PreferenceProfile one{{t.players[a]}, t.outcomes, {*order}};
        prefs[t.players[a]] = ToJson(one)[t.players[a]];
      } else {
        Json pairs = Json::array();
        for (int x = 0; x < t.prefs[a].size(); ++x)
          for (int y = 0; y < t.prefs[a].size(); ++y)
            if (t.prefs[a].Holds(x, y)) pairs.push_back({t.outcomes[x], t.outcomes[y]});
        prefs[t.players[a]] = {{"less", pairs}};
      }
    }
    out["preferences"] = prefs;
  }
  return out;
}

Json ToJson(const EpsilonCertificate& cert, const TreeGame& tree) {
  Json profile = Json::array();
  for (int n = 0; n < tree.NumNodes(); ++n)
    profile.push_back(tree.IsLeaf(n) ? Json(nullptr) : Json(cert.profile[n]));
  return {{"k", cert.k},
          {"profile", profile},
          {"leaf", PlayLeaf(tree, cert.profile)},
          {"max_gain", FormatRational(cert.max_gain)},
          {"bound", FormatRational(Rational(1, cert.k))},
          {"holds", cert.holds}};
}

}  // namespace eqsynth::io
