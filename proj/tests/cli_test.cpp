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
#include <sstream>

#include "doctest.h"
#include "eqsynth/io.hpp"
#include "helpers.hpp"

namespace eqsynth {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct Outcome_ {
  int code;
  std::string out;
  std::string err;
};

Outcome_ RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) { return std::string(EQSYNTH_DATA_DIR) + "/" + name; }

fs::path Scratch() {
  fs::path dir = fs::temp_directory_path() / "eqsynth_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string Write(const std::string& name, const Json& doc) {
  fs::path p = Scratch() / name;
  std::ofstream(p) << doc.dump();
  return p.string();
}

TEST_CASE("solve") {
  auto r = RunCli({"solve", Data("parity.json")});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["win0"] == Json::parse(R"(["a"])"));
  CHECK(j["win1"] == Json::parse(R"(["b", "c"])"));
}

TEST_CASE("solve rejects dead ends") {
  auto r = RunCli({"solve", Data("dead_end.json")});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["errors"][0]["code"] == "DeadEndVertex");
  CHECK(r.err.find("DeadEndVertex") != std::string::npos);
}

TEST_CASE("solve emits dot files") {
  std::string out = (Scratch() / "solved.json").string();
  auto r = RunCli({"solve", Data("parity.json"), "--emit-dot", "--out", out});
  REQUIRE(r.code == 0);
  Json j = io::ReadFile(out);
  REQUIRE(j["dot_files"].size() == 3);
  for (const auto& f : j["dot_files"]) {
    std::ifstream in(f.get<std::string>());
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().rfind("digraph", 0) == 0);
  }
}

TEST_CASE("ne and verify") {
  auto r = RunCli({"ne", Data("matching.json")});
  REQUIRE(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["outcome"] == "mid");
  CHECK(rep["bits"]["a"].get<int>() <= rep["bound"].get<int>());
  std::string profile = Write("profile.json", {{"machines", rep["machines"]}});
  CHECK(RunCli({"verify", Data("matching.json"), profile}).code == 0);
}

TEST_CASE("verify finds the escape") {
  auto r = RunCli({"verify", Data("escape.json"), Data("looping_profile.json")});
  CHECK(r.code == 1);
  Json w = Json::parse(r.out)["deviation"];
  CHECK(w["player"] == "A");
  CHECK(w["improved"] == "y");
  CHECK(w["play"]["cycle"] == Json::parse(R"(["w"])"));
}

TEST_CASE("verify rejects mismatched players") {
  Json profile = Json::parse(R"({"machines": {"A": {"choice": {"u": ["u"], "w": ["w"]}},
                                              "Z": {"choice": {}}}})");
  auto r = RunCli({"verify", Data("escape.json"), Write("mismatch.json", profile)});
  CHECK(r.code == 2);
}

TEST_CASE("spe") {
  auto r = RunCli({"spe", Data("matching.json")});
  REQUIRE(r.code == 0);
  Json rep = Json::parse(r.out);
  std::string profile = Write("spe_profile.json", {{"machines", rep["machines"]}});
  CHECK(RunCli({"verify", "--subgame", Data("matching.json"), profile}).code == 0);
  auto bad = RunCli({"spe", Data("pattern.json")});
  CHECK(bad.code == 2);
  CHECK(Json::parse(bad.out)["errors"][0]["code"] == "NotAntagonistic");
}

TEST_CASE("pareto-ne") {
  auto r = RunCli({"pareto-ne", Data("pattern.json")});
  CHECK(r.code == 3);
  CHECK(Json::parse(r.out)["witness"] ==
        Json::parse(R"({"a": "a", "b": "b", "x": "x", "y": "y", "z": "z"})"));
  auto ok = RunCli({"pareto-ne", Data("matching.json")});
  CHECK(ok.code == 0);
}

TEST_CASE("guarantee") {
  auto r = RunCli({"guarantee", Data("matching.json")});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["guarantees"]["a"]["p"] == "mid");
  auto e = RunCli({"guarantee", Data("energy.json")});
  REQUIRE(e.code == 0);
  CHECK(Json::parse(e.out)["product_vertices"].get<int>() > 2);
}

TEST_CASE("discretize") {
  auto r = RunCli({"discretize", Data("payoff_tree.json"), "--k", "2"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["certificate"]["holds"] == true);
  CHECK(j["index_game"]["tree"]["children"][0]["payoffs"] == Json::parse(R"({"a": "2", "b": "1"})"));
  CHECK(RunCli({"discretize", Data("payoff_tree.json"), "--k", "0"}).code == 2);
  CHECK(RunCli({"discretize", Data("payoff_tree.json")}).code == 2);
}

TEST_CASE("gallery") {
  auto r = RunCli({"gallery"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j["nonash"].size() == 9);
  for (const auto& row : j["nonash"]) {
    int d = row["depth"];
    CHECK(row["payoff"] == FormatRational(Rational(d - 1, d)));
  }
  for (const auto& row : j["escape"]) CHECK(row["root_outcome"] == "y");
  CHECK(j["three_leaf"]["ne_outcomes"] == Json::parse(R"(["z"])"));
  CHECK(j["six_outcome"]["ne_outcomes"] == Json::parse(R"(["z", "gamma"])"));
  CHECK(j["six_outcome"]["weakly_pareto_optimal"] == Json::parse(R"({"z": false, "gamma": false})"));
  CHECK(RunCli({"gallery", "--depth", "1"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(RunCli({}).code == 2);
  CHECK(RunCli({"frobnicate"}).code == 2);
  CHECK(RunCli({"solve"}).code == 2);
  CHECK(RunCli({"solve", (Scratch() / "missing.json").string()}).code == 2);
  CHECK(RunCli({"--help"}).code == 0);
  CHECK(RunCli({"solve", Data("parity.json"), "--max-vertices", "2"}).code == 2);
}

TEST_CASE("acceptance subset") {
  auto r = RunCli({"acceptance", "--criterion", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS [5]", 0) == 0);
}

TEST_CASE("property: outputs are deterministic and profiles re-verify") {
  gen::Rng rng(91);
  for (int trial = 0; trial < 40; ++trial) {
    GraphGame g = gen::RandomGraphGame(rng, gen::GameShape{4, 3, 4, trial % 2 == 0, 1});
    std::string game = Write("random_game.json", io::ToJson(g));
    auto first = RunCli({"ne", game});
    auto second = RunCli({"ne", game});
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    Json rep = Json::parse(first.out);
    std::string profile = Write("random_profile.json", {{"machines", rep["machines"]}});
    CHECK(RunCli({"verify", game, profile}).code == 0);
    auto pareto = RunCli({"pareto-ne", game});
    if (pareto.code == 2) {
      CHECK(trial % 2 != 0);
      CHECK(Json::parse(pareto.out)["errors"][0]["code"] == "NotLinear");
      continue;
    }
    CHECK((pareto.code == 0 || pareto.code == 3));
    if (pareto.code == 0) {
      std::string pp = Write("pareto_profile.json", {{"machines", Json::parse(pareto.out)["machines"]}});
      CHECK(RunCli({"verify", game, pp}).code == 0);
    }
  }
}

}  // namespace
}  // namespace eqsynth
