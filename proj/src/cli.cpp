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


#include "eqsynth/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "eqsynth/acceptance.hpp"
#include "eqsynth/equilibria.hpp"
#include "eqsynth/extensive.hpp"
#include "eqsynth/guarantees.hpp"
#include "eqsynth/io.hpp"
#include "eqsynth/winlose.hpp"

namespace eqsynth::cli {
namespace {

using io::Json;

struct Config {
  std::string command;
  std::vector<std::string> inputs;
  std::string out_path;
  bool emit_dot = false;
  bool subgame = false;
  std::uint64_t seed = acceptance::kDefaultSeed;
  int max_vertices = 64;
  int k = 0;
  int depth = 10;
  std::vector<int> criteria;
};

struct Context {
  const Config& cfg;
  std::ostream& out;
  std::ostream& err;
};

void Emit(const Context& ctx, const Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (ctx.cfg.out_path.empty()) {
    ctx.out << text;
    return;
  }
  std::ofstream f(ctx.cfg.out_path);
  if (!f) throw Error(ErrorCode::kInvalidInput, "cannot write " + ctx.cfg.out_path);
  f << text;
}

// DOT files are written next to the output (or the input) as <base>.<name>.dot.
Json EmitDots(const Context& ctx, const std::vector<std::pair<std::string, std::string>>& dots) {
  std::string base = ctx.cfg.out_path.empty() ? ctx.cfg.inputs.front() : ctx.cfg.out_path;
  if (base.size() > 5 && base.substr(base.size() - 5) == ".json") base.resize(base.size() - 5);
  Json files = Json::array();
  for (const auto& [name, text] : dots) {
    const std::string path = base + "." + name + ".dot";
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
    f << text;
    files.push_back(path);
  }
  return files;
}

void CheckSize(const Context& ctx, const Arena& arena) {
  if (arena.NumVertices() > ctx.cfg.max_vertices)
    throw Error(ErrorCode::kTooLarge, "arena has " + std::to_string(arena.NumVertices()) +
                                          " vertices, above --max-vertices " +
                                          std::to_string(ctx.cfg.max_vertices));
}

GraphGame LoadGraphGame(const Context& ctx) {
  GraphGame g = io::GraphGameFromJson(io::ReadFile(ctx.cfg.inputs.at(0)));
  CheckSize(ctx, g.arena);
  return g;
}

int CmdSolve(const Context& ctx) {
  WinLoseGame g = io::WinLoseGameFromJson(io::ReadFile(ctx.cfg.inputs.at(0)));
  CheckSize(ctx, g.arena);
  SolveResult r = Solve(g);
  Json doc = io::ToJson(r, g.arena);
  if (ctx.cfg.emit_dot)
    doc["dot_files"] = EmitDots(ctx, {{"arena", ToDot(g.arena)},
                                      {"strategy0", ToDot(r.strategy0, g.arena)},
                                      {"strategy1", ToDot(r.strategy1, g.arena)}});
  Emit(ctx, doc);
  return kOk;
}

int CmdGuarantee(const Context& ctx) {
  Json in = io::ReadFile(ctx.cfg.inputs.at(0));
  if (io::HasEnergy(in)) {
    Arena arena = io::ArenaFromJson(in);
    CheckSize(ctx, arena);
    EnergyGame e = MakeEnergyGame(arena, io::EnergyFromJson(in, arena));
    Json doc = io::ToJson(ComputeGuarantees(e.game), e.game);
    doc["product_vertices"] = e.game.arena.NumVertices();
    if (ctx.cfg.emit_dot) doc["dot_files"] = EmitDots(ctx, {{"product", ToDot(e.game.arena)}});
    Emit(ctx, doc);
    return kOk;
  }
  GraphGame g = io::GraphGameFromJson(in);
  CheckSize(ctx, g.arena);
  Emit(ctx, io::ToJson(ComputeGuarantees(g), g));
  return kOk;
}

Json MachineDots(const Context& ctx, const StrategyProfile& profile, const Arena& arena) {
  std::vector<std::pair<std::string, std::string>> dots{{"arena", ToDot(arena)}};
  for (const auto& m : profile.machines)
    dots.emplace_back("machine_" + arena.PlayerName(m.player()), ToDot(m, arena));
  return EmitDots(ctx, dots);
}

int EmitReport(const Context& ctx, const GraphGame& g, const SynthesisReport& rep) {
  Json doc = io::ToJson(rep, g);
  if (ctx.cfg.emit_dot) doc["dot_files"] = MachineDots(ctx, rep.profile, g.arena);
  Emit(ctx, doc);
  return kOk;
}

int CmdNe(const Context& ctx) {
  GraphGame g = LoadGraphGame(ctx);
  return EmitReport(ctx, g, SynthesizeNe(g));
}

int CmdSpe(const Context& ctx) {
  GraphGame g = LoadGraphGame(ctx);
  StrategyProfile profile = SynthesizeAntagonisticSpe(g);
  Lasso lasso = InducedLasso(g.arena, profile, g.arena.Start());
  Json bits = Json::object();
  for (const auto& m : profile.machines) bits[g.arena.PlayerName(m.player())] = m.MemoryBits();
  Json doc = {{"machines", io::ToJson(profile, g.arena)["machines"]},
              {"main_lasso", io::ToJson(lasso, g.arena)},
              {"outcome", g.prefs.outcomes[g.OutcomeOf(lasso)]},
              {"bits", bits}};
  if (ctx.cfg.emit_dot) doc["dot_files"] = MachineDots(ctx, profile, g.arena);
  Emit(ctx, doc);
  return kOk;
}

int CmdParetoNe(const Context& ctx) {
  GraphGame g = LoadGraphGame(ctx);
  try {
    return EmitReport(ctx, g, MullerParetoNe(g));
  } catch (const PatternPresentError& e) {
    Emit(ctx, {{"errors", {{{"code", "PatternPresent"}, {"detail", e.what()}}}},
               {"witness", io::ToJson(e.witness(), g.prefs)}});
    ctx.err << "PatternPresent: " << e.what() << "\n";
    return kPattern;
  }
}

int CmdVerify(const Context& ctx) {
  if (ctx.cfg.inputs.size() != 2)
    throw Error(ErrorCode::kInvalidInput, "verify needs a game and a profile");
  GraphGame g = LoadGraphGame(ctx);
  StrategyProfile profile = io::ProfileFromJson(io::ReadFile(ctx.cfg.inputs[1]), g.arena);
  if (ctx.cfg.subgame) {
    auto failure = VerifySpe(g, profile);
    Emit(ctx, {{"failure", failure ? io::ToJson(*failure, g) : Json(nullptr)}});
    return failure ? kDeviation : kOk;
  }
  auto witness = VerifyNe(g, profile);
  Emit(ctx, {{"deviation", witness ? io::ToJson(*witness, g) : Json(nullptr)}});
  return witness ? kDeviation : kOk;
}

int CmdDiscretize(const Context& ctx) {
  if (ctx.cfg.k < 1) throw Error(ErrorCode::kOutOfRange, "--k must be a positive integer");
  TreeGame tree = io::TreeFromJson(io::ReadFile(ctx.cfg.inputs.at(0)));
  EpsilonGridResult r = EpsilonGridGame(tree, ctx.cfg.k);
  Json doc = {{"index_game", io::ToJson(r.index_game)},
              {"certificate", io::ToJson(r.certificate, tree)}};
  if (ctx.cfg.emit_dot) doc["dot_files"] = EmitDots(ctx, {{"tree", ToDot(tree)}});
  Emit(ctx, doc);
  return r.certificate.holds ? kOk : kDeviation;
}

Json SpineActions(const InductionResult& bi, int depth) {
  Json actions = Json::array();
  for (int j = 0; j < depth; ++j) actions.push_back(bi.profile[j] == 0 ? "continue" : "exit");
  return actions;
}

Json OutcomeNames(const TreeGame& t, const std::vector<Outcome>& os) {
  Json names = Json::array();
  for (Outcome o : os) names.push_back(t.outcomes[o]);
  return names;
}

int CmdGallery(const Context& ctx) {
  const int depth = ctx.cfg.depth;
  if (depth < 3 || depth > 60) throw Error(ErrorCode::kOutOfRange, "--depth must lie in 3..60");
  Json nonash = Json::array(), escape = Json::array(), usc = Json::array();
  for (int d = 2; d <= depth; ++d) {
    TreeGame t = NonashTruncation(d);
    InductionResult bi = BackwardInduction(t);
    nonash.push_back({{"depth", d},
                      {"payoff", FormatRational(t.nodes[bi.leaf[0]].payoffs[0])},
                      {"actions", SpineActions(bi, d)}});
    TreeGame u = UscTruncation(d);
    InductionResult ubi = BackwardInduction(u);
    const auto& pay = u.nodes[ubi.leaf[0]].payoffs;
    usc.push_back({{"depth", d},
                   {"payoffs", {{"a", FormatRational(pay[0])}, {"b", FormatRational(pay[1])}}},
                   {"actions", SpineActions(ubi, d)}});
    if (d < 3) continue;
    TreeGame e = EscapeTruncation(d);
    InductionResult ebi = BackwardInduction(e);
    escape.push_back({{"depth", d},
                      {"root_outcome", e.outcomes[e.nodes[ebi.leaf[0]].outcome]},
                      {"actions", SpineActions(ebi, d)}});
  }
  PreferenceProfile counter{{"a", "b"}, {"x", "y", "z"},
                            {StrictWeakOrder(std::vector<int>{2, 1, 0}),
                             StrictWeakOrder(std::vector<int>{0, 2, 1})}};
  TreeGame three = ThreeLeafGame(counter, 1, 0, 1, 2);
  TreeGame six = SixOutcomeExample();
  auto six_ne = EnumerateNeOutcomes(six);
  auto weak = WeakParetoFront(six.prefs, TreeRealizableOutcomes(six));
  Json flags = Json::object();
  for (Outcome o : six_ne)
    flags[six.outcomes[o]] = std::find(weak.begin(), weak.end(), o) != weak.end();
  TreeGame four = FourOutcomeExample();
  Json doc = {
      {"nonash", nonash},
      {"escape", escape},
      {"usc", usc},
      {"three_leaf",
       {{"ne_outcomes", OutcomeNames(three, EnumerateNeOutcomes(three))},
        {"pareto_optimal_ne", HasParetoOptimalNe(three)}}},
      {"six_outcome",
       {{"ne_outcomes", OutcomeNames(six, six_ne)}, {"weakly_pareto_optimal", flags}}},
      {"four_outcome",
       {{"ne_outcomes", OutcomeNames(four, EnumerateNeOutcomes(four))},
        {"pareto_optimal_ne", HasParetoOptimalNe(four)}}}};
  if (ctx.cfg.emit_dot && !ctx.cfg.out_path.empty())
    doc["dot_files"] = EmitDots(ctx, {{"three_leaf", ToDot(three)},
                                      {"six_outcome", ToDot(six)},
                                      {"four_outcome", ToDot(four)},
                                      {"escape", ToDot(EscapeTruncation(depth))}});
  Emit(ctx, doc);
  return kOk;
}

int CmdAcceptance(const Context& ctx) {
  std::vector<int> ids = ctx.cfg.criteria;
  if (ids.empty())
    for (int id = 1; id <= acceptance::kNumCriteria; ++id) ids.push_back(id);
  bool ok = true;
  for (int id : ids) {
    auto r = acceptance::RunCriterion(id, ctx.cfg.seed);
    ctx.out << acceptance::FormatLine(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? kOk : kDeviation;
}

int Dispatch(const Context& ctx) {
  const std::string& c = ctx.cfg.command;
  if (c == "solve") return CmdSolve(ctx);
  if (c == "guarantee") return CmdGuarantee(ctx);
  if (c == "ne") return CmdNe(ctx);
  if (c == "spe") return CmdSpe(ctx);
  if (c == "pareto-ne") return CmdParetoNe(ctx);
  if (c == "verify") return CmdVerify(ctx);
  if (c == "discretize") return CmdDiscretize(ctx);
  if (c == "gallery") return CmdGallery(ctx);
  return CmdAcceptance(ctx);
}

int Invalid(const Context& ctx, const std::vector<ArenaIssue>& issues) {
  Json list = Json::array();
  for (const auto& i : issues)
    list.push_back({{"code", std::string(ErrorCodeName(i.code))}, {"detail", i.detail}});
  try {
    Emit(ctx, {{"errors", list}});
  } catch (const Error&) {
    // Unwritable --out: the message below still reaches the user.
  }
  for (const auto& i : issues) ctx.err << ErrorCodeName(i.code) << ": " << i.detail << "\n";
  return kInvalid;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Equilibrium synthesis for multi-outcome games on graphs", "eqsynth"};
  app.require_subcommand(1);
  app.add_flag("--emit-dot", cfg.emit_dot, "Write DOT files next to the JSON output");
  app.add_option("--out", cfg.out_path, "Write the JSON result here instead of stdout");
  app.add_option("--seed", cfg.seed, "Seed for random instances");
  app.add_option("--max-vertices", cfg.max_vertices, "Reject larger arenas")->check(CLI::PositiveNumber);
  struct Sub {
    const char* name;
    const char* help;
    int inputs;
  };
  const Sub subs[] = {
      {"solve", "Solve a win/lose game", 1},
      {"guarantee", "Best guarantees of every player", 1},
      {"ne", "Synthesize a finite-memory Nash equilibrium", 1},
      {"spe", "Synthesize a subgame perfect equilibrium of an antagonistic game", 1},
      {"pareto-ne", "Synthesize a Pareto-optimal Nash equilibrium", 1},
      {"verify", "Check a profile for profitable deviations", 2},
      {"discretize", "Grid-discretize a payoff tree and certify its equilibrium", 1},
      {"gallery", "Truncations and finite examples", 0},
      {"acceptance", "Run the acceptance criteria", 0},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    sub->callback([&cfg, name = std::string(s.name)] { cfg.command = name; });
    if (s.inputs == 1) sub->add_option("input", cfg.inputs, "Input JSON")->required()->expected(1);
    if (s.inputs == 2)
      sub->add_option("inputs", cfg.inputs, "Game JSON and profile JSON")->required()->expected(2);
    if (std::string(s.name) == "verify")
      sub->add_flag("--subgame", cfg.subgame, "Check every reachable history");
    if (std::string(s.name) == "discretize")
      sub->add_option("--k", cfg.k, "Grid resolution")->required();
    if (std::string(s.name) == "gallery")
      sub->add_option("--depth", cfg.depth, "Largest truncation depth (3..60)");
    if (std::string(s.name) == "acceptance")
      sub->add_option("--criterion", cfg.criteria, "Criterion ids to run");
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }
  Context ctx{cfg, out, err};
  try {
    return Dispatch(ctx);
  } catch (const io::InvalidArena& e) {
    return Invalid(ctx, e.issues());
  } catch (const Error& e) {
    return Invalid(ctx, {{e.code(), e.what()}});
  } catch (const std::exception& e) {
    return Invalid(ctx, {{ErrorCode::kInvalidInput, e.what()}});
  }
}

}  // namespace eqsynth::cli
