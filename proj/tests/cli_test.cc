// Copyright 2026 The Netgame Authors
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

#include "netgame/cli.h"

#include <gtest/gtest.h>

#include <sstream>

#include "netgame/io.h"

namespace netgame::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string Net(const std::string& name) {
  return std::string(NETGAME_DATA_DIR) + "/networks/" + name + ".json";
}

std::string Profile(const std::string& name) {
  return std::string(NETGAME_DATA_DIR) + "/profiles/" + name + ".json";
}

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "netgame");
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

Json Report(const Result& r) { return Json::parse(r.out); }

TEST(CliAnalyzeTest, UniqueOptimum) {
  const Result r = Invoke({"analyze", Net("unique_xstar")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = Report(r);
  EXPECT_EQ(j["theta"], "3");
  EXPECT_EQ(j["alpha"], "3");
  EXPECT_EQ(j["transport_cost"], "9");
  EXPECT_EQ(j["assumption1"], true);
}

TEST(CliAnalyzeTest, CostlierOptimumHasWitness) {
  const Json j = Report(Invoke({"analyze", Net("costly_shortcut")}));
  EXPECT_EQ(j["assumption1"], false);
  EXPECT_EQ(j["assumption1_witness"]["violating_path"]["cost"], "4");
  EXPECT_EQ(j["alpha"], "3");
}

TEST(CliAnalyzeTest, EmptyNetwork) {
  const Json j = Report(Invoke({"analyze", Net("no_edges")}));
  EXPECT_EQ(j["theta"], "0");
  EXPECT_EQ(j["alpha"], "infinite");
  EXPECT_EQ(j["assumption1"], "not applicable");
}

TEST(CliAnalyzeTest, MinCutReport) {
  const Json j = Report(Invoke({"analyze", Net("three_cut")}));
  EXPECT_EQ(j["min_cut"]["capacity"], "3");
  EXPECT_EQ(j["min_cut"]["edges"].size(), 3u);
}

TEST(CliAnalyzeTest, ParseErrorsExitTwo) {
  EXPECT_EQ(Invoke({"analyze", "/nonexistent.json"}).code, kParseError);
  EXPECT_EQ(Invoke({"analyze"}).code, kParseError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kParseError);
}

TEST(CliSolveTest, MixedRegion) {
  const Result r = Invoke({"solve", Net("three_cut"), "--p1", "6", "--p2", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = Report(r);
  EXPECT_EQ(j["region"], "III");
  EXPECT_EQ(j["profile"]["p1_strategy"][0]["prob"], "1/2");
  EXPECT_EQ(j["profile"]["p2_strategy"][1]["prob"], "1/2");
  EXPECT_EQ(j["aggregates"]["closed_form"], j["aggregates"]["measured"]);
  EXPECT_EQ(j["aggregates"]["closed_form"]["yield"], "1/2");
  EXPECT_EQ(j["verification"]["is_ne"], true);
}

TEST(CliSolveTest, RegionOnePure) {
  const Json j =
      Report(Invoke({"solve", Net("three_cut"), "--p1", "2", "--p2", "5"}));
  EXPECT_EQ(j["region"], "I");
  EXPECT_EQ(j["verification"]["U1"], "0");
  EXPECT_EQ(j["verification"]["U2"], "0");
}

TEST(CliSolveTest, ExitCodes) {
  const Result routing =
      Invoke({"solve", Net("costly_shortcut"), "--p1", "7/2", "--p2", "2"});
  EXPECT_EQ(routing.code, kNotAlphaRouted);
  EXPECT_NE(routing.err.find("Assumption1Violated"), std::string::npos);
  EXPECT_EQ(Invoke({"solve", Net("three_cut"), "--p1", "3", "--p2", "2"}).code,
            kBoundary);
  const Result two = Invoke(
      {"solve", Net("three_cut"), "--p1", "3", "--p2", "1/2"});
  EXPECT_EQ(two.code, kBoundary);
  EXPECT_EQ(Report(two)["profiles"].size(), 2u);
  EXPECT_EQ(Invoke({"solve", Net("three_cut"), "--p1", "0.5", "--p2", "2"}).code,
            kParseError);
  EXPECT_EQ(Invoke({"solve", Net("three_cut"), "--p1", "0", "--p2", "2"}).code,
            kParseError);
  EXPECT_EQ(Invoke({"--max-attack-edges", "2", "solve", Net("three_cut"),
                    "--p1", "6", "--p2", "2"})
                .code,
            kBudgetExceeded);
}

TEST(CliSolveTest, NoPathIsDegenerate) {
  const Result r = Invoke({"solve", Net("no_edges"), "--p1", "6", "--p2", "2"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(Report(r)["region"], "degenerate");
}

TEST(CliVerifyTest, Outcomes) {
  EXPECT_EQ(Invoke({"verify", Net("costly_shortcut"),
                    Profile("costly_shortcut_equilibrium"), "--p1", "7/2",
                    "--p2", "2"})
                .code,
            kOk);
  const Result pure = Invoke({"verify", Net("three_cut"),
                              Profile("three_cut_pure_cut"), "--p1", "6",
                              "--p2", "2"});
  EXPECT_EQ(pure.code, kNotEquilibrium);
  EXPECT_EQ(Report(pure)["verification"]["gap1"], "9");
  EXPECT_EQ(Invoke({"verify", Net("three_cut"), Net("three_cut"), "--p1", "6",
                    "--p2", "2"})
                .code,
            kParseError);
  EXPECT_EQ(Invoke({"--max-paths", "2", "verify", Net("three_cut"),
                    Profile("three_cut_mixed_cut"), "--p1", "6", "--p2", "2"})
                .code,
            kBudgetExceeded);
}

TEST(CliBestResponseTest, BothPlayers) {
  const Json attacker = Report(Invoke({"best-response", Net("three_cut"),
                                       Profile("three_cut_pure_cut"),
                                       "--player", "2", "--p1", "6", "--p2",
                                       "2"}));
  EXPECT_EQ(attacker["value"], "3");
  EXPECT_EQ(attacker["attack"].size(), 3u);
  const Json defender = Report(Invoke({"best-response", Net("three_cut"),
                                       Profile("no_attack"), "--player", "1",
                                       "--p1", "6", "--p2", "2"}));
  EXPECT_EQ(defender["value"], "9");
  const Json blocked = Report(Invoke({"best-response", Net("three_cut"),
                                      Profile("three_cut_all_edges"),
                                      "--player", "1", "--p1", "6", "--p2",
                                      "2"}));
  EXPECT_EQ(blocked["value"], "0");
  EXPECT_TRUE(blocked["flow"]["paths"].empty());
  EXPECT_EQ(Invoke({"best-response", Net("three_cut"), Profile("no_attack"),
                    "--player", "3", "--p1", "6", "--p2", "2"})
                .code,
            kParseError);
}

TEST(CliMaximinTest, Values) {
  const Json mixed =
      Report(Invoke({"maximin", Net("three_cut"), "--p1", "6", "--p2", "2"}));
  EXPECT_EQ(mixed["defender_maximin"]["value"], "0");
  EXPECT_EQ(mixed["attacker_maximin"]["value"], "0");
  EXPECT_EQ(mixed["minimax"]["defender_value"], "0");
  EXPECT_EQ(mixed["minimax"]["attacker_value"], "0");
  const Json costly = Report(
      Invoke({"maximin", Net("costly_shortcut"), "--p1", "7/2", "--p2", "2"}));
  EXPECT_EQ(costly["defender_maximin"]["value"], "0");
  EXPECT_EQ(costly["attacker_maximin"]["value"], "0");
  EXPECT_TRUE(costly["minimax"].is_string());
}

TEST(CliFormatTest, DeterministicAndTextRendering) {
  const std::vector<std::string> args{"solve", Net("three_cut"), "--p1", "6",
                                      "--p2", "2"};
  const Result a = Invoke(args), b = Invoke(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out).dump(2) + "\n", a.out);
  std::vector<std::string> text = args;
  text.insert(text.begin(), {"--format", "text"});
  const Result t = Invoke(text);
  EXPECT_EQ(t.code, kOk);
  EXPECT_NE(t.out.find("verification.is_ne"), std::string::npos);
  EXPECT_NE(t.out.find("region"), std::string::npos);
  EXPECT_EQ(t.out.find('{'), std::string::npos);
}

}  // namespace
}  // namespace netgame::cli
