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

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "netgame/equilibrium.h"
#include "netgame/flow.h"
#include "netgame/game.h"
#include "netgame/io.h"
#include "netgame/network.h"

namespace netgame::cli {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAlphaRouted: return kNotAlphaRouted;
    case ErrorCode::kBoundary:
    case ErrorCode::kWrongRegion: return kBoundary;
    case ErrorCode::kPathBudgetExceeded:
    case ErrorCode::kEdgeBudgetExceeded: return kBudgetExceeded;
    default: return kParseError;
  }
}

namespace {

struct Options {
  std::string format = "json";
  std::size_t max_paths = 5000;
  std::size_t max_attack_edges = 20;
  std::string network_file;
  std::string profile_file;
  std::string p1;
  std::string p2;
  int player = 1;

  SearchBudget Budget() const {
    SearchBudget budget;
    budget.max_paths = max_paths;
    budget.max_attack_edges = max_attack_edges;
    return budget;
  }
};

// ---- text rendering -------------------------------------------------------

bool IsPath(const Json& j) {
  return j.is_object() && j.size() >= 2 && j.contains("nodes") &&
         j.contains("amount");
}

bool IsEdgePair(const Json& j) {
  return j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string();
}

std::string Inline(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (IsEdgePair(j)) {
    return "(" + j[0].get<std::string>() + "," + j[1].get<std::string>() + ")";
  }
  if (IsPath(j)) {
    std::string s;
    for (const auto& v : j["nodes"]) {
      if (!s.empty()) s += "-";
      s += v.get<std::string>();
    }
    s += " x " + j["amount"].get<std::string>();
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() != "nodes" && it.key() != "amount") {
        s += " " + it.key() + "=" + Inline(it.value());
      }
    }
    return s;
  }
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k > 0) s += ", ";
      s += Inline(j[k]);
    }
    return s + "]";
  }
  if (j.is_object()) {
    std::string s = "{";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) s += ", ";
      first = false;
      s += it.key() + "=" + Inline(it.value());
    }
    return s + "}";
  }
  return j.dump();
}

// Leaves are scalars, edge pairs, paths, or arrays of those.
bool IsLeaf(const Json& j) {
  if (!j.is_structured() || IsEdgePair(j) || IsPath(j)) return true;
  if (j.is_array()) {
    return std::all_of(j.begin(), j.end(), [](const Json& e) {
      return !e.is_structured() || IsEdgePair(e);
    });
  }
  return false;
}

void Flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (IsLeaf(j)) {
    rows.emplace_back(prefix, Inline(j));
    return;
  }
  if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) {
      Flatten(j[k], prefix + "[" + std::to_string(k) + "]", rows);
    }
    if (j.empty()) rows.emplace_back(prefix, "[]");
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    Flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
            rows);
  }
}

void Emit(const Json& report, const Options& opt, std::ostream& out) {
  if (opt.format == "text") {
    std::vector<std::pair<std::string, std::string>> rows;
    Flatten(report, "", rows);
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [key, value] : rows) {
      out << std::left << std::setw(static_cast<int>(width)) << key << "  "
          << value << "\n";
    }
  } else {
    out << report.dump(2) << "\n";
  }
}

// ---- shared pieces --------------------------------------------------------

Network LoadNetwork(const std::string& path) {
  return NetworkFromJson(ParseJson(ReadFile(path), path));
}

GameParams LoadParams(const Options& opt) {
  auto parse = [](const std::string& text, const std::string& flag) {
    try {
      return ParseRational(text);
    } catch (const Error& e) {
      throw Error(e.code(), flag + ": " + e.what());
    }
  };
  Rational p1 = parse(opt.p1, "--p1");
  Rational p2 = parse(opt.p2, "--p2");
  if (p1 <= 0 || p2 <= 0) {
    throw Error(ErrorCode::kParse, "--p1 and --p2 must be positive");
  }
  return GameParams::Make(std::move(p1), std::move(p2));
}

Json CutToJson(const Network& net, const Cut& cut) {
  Json json;
  Json s_side = Json::array();
  for (NodeIndex v : cut.s_side) s_side.push_back(net.name(v));
  json["s_side"] = std::move(s_side);
  json["edges"] = AttackToJson(net, Attack{cut.cut_set});
  json["capacity"] = RationalToJson(cut.capacity);
  return json;
}

Json ProfileJson(const Network& net, const EquilibriumProfile& profile) {
  Json json;
  json["provenance"] = ProvenanceName(profile.provenance);
  json["p1_strategy"] = DefenderStrategyToJson(net, profile.s1);
  json["p2_strategy"] = AttackerStrategyToJson(net, profile.s2);
  return json;
}

Json AggregatesJson(const EquilibriumAggregates& agg) {
  Json json;
  json["U1"] = RationalToJson(agg.defender_payoff);
  json["U2"] = RationalToJson(agg.attacker_payoff);
  json["expected_initial_flow"] = RationalToJson(agg.initial_flow);
  json["expected_transport_cost"] = RationalToJson(agg.transport_cost);
  json["expected_attack_cost"] = RationalToJson(agg.attack_cost);
  json["expected_effective_flow"] = RationalToJson(agg.effective_flow);
  json["expected_lost_flow"] = RationalToJson(agg.lost_flow);
  json["yield"] = agg.yield ? RationalToJson(*agg.yield) : Json("undefined");
  return json;
}

Json VerificationJson(const Network& net, const VerificationReport& report) {
  Json json;
  json["is_ne"] = report.is_ne;
  json["gap1"] = RationalToJson(report.defender_gap);
  json["gap2"] = RationalToJson(report.attacker_gap);
  json["gap1_approx"] = ToDouble(report.defender_gap);
  json["gap2_approx"] = ToDouble(report.attacker_gap);
  json["U1"] = RationalToJson(report.payoffs.defender);
  json["U2"] = RationalToJson(report.payoffs.attacker);
  json["region"] = report.region ? Json(report.region->Name()) : Json("degenerate");
  Json defender;
  defender["value"] = RationalToJson(report.defender_response.value);
  defender["flow"] = PathFlowToJson(net, report.defender_response.argmax);
  json["defender_best_response"] = std::move(defender);
  Json attacker;
  attacker["value"] = RationalToJson(report.attacker_response.value);
  attacker["attack"] = AttackToJson(net, report.attacker_response.argmax);
  attacker["attacks_evaluated"] = report.attacker_response.attacks_evaluated;
  json["attacker_best_response"] = std::move(attacker);
  Json checks = Json::array();
  for (const PropertyCheck& c : report.checks) {
    Json check;
    check["name"] = c.name;
    check["status"] = CheckStatusName(c.status);
    check["detail"] = c.detail;
    checks.push_back(std::move(check));
  }
  json["checks"] = std::move(checks);
  return json;
}

Json ParamsJson(const GameParams& params) {
  Json json;
  json["p1"] = RationalToJson(params.p1);
  json["p2"] = RationalToJson(params.p2);
  return json;
}

// ---- commands -------------------------------------------------------------

int Analyze(const Options& opt, std::ostream& out) {
  const Network net = LoadNetwork(opt.network_file);
  const FlowAnalysis analysis = AnalyzeFlows(net);
  Json report;
  report["command"] = "analyze";
  Json summary;
  summary["nodes"] = net.num_nodes();
  summary["edges"] = net.num_edges();
  summary["source"] = net.name(net.source());
  summary["sink"] = net.name(net.sink());
  report["network"] = std::move(summary);
  report["theta"] = RationalToJson(analysis.theta);
  report["alpha"] = FormatExtended(analysis.alpha);
  report["min_cut"] = CutToJson(net, analysis.min_cut);
  report["x_star"] = PathFlowToJson(net, analysis.x_star);
  report["transport_cost"] = RationalToJson(analysis.min_transport_cost);
  if (!analysis.alpha_routed) {
    report["assumption1"] = "not applicable";
  } else {
    report["assumption1"] = *analysis.alpha_routed;
    Json witness;
    if (*analysis.alpha_routed) {
      witness["paths"] = PathFlowToJson(net, analysis.x_star)["paths"];
    } else {
      const FlowPath& bad = *analysis.violating_path;
      Json path = PathFlowToJson(net, PathFlow{{bad}})["paths"][0];
      path["cost"] = RationalToJson(PathCost(net, bad.edges));
      witness["violating_path"] = std::move(path);
    }
    report["assumption1_witness"] = std::move(witness);
  }
  Emit(report, opt, out);
  return kOk;
}

int Solve(const Options& opt, std::ostream& out, std::ostream& err) {
  const Network net = LoadNetwork(opt.network_file);
  const GameParams params = LoadParams(opt);
  const FlowAnalysis analysis = AnalyzeFlows(net);
  const SearchBudget budget = opt.Budget();

  Json report;
  report["command"] = "solve";
  report["params"] = ParamsJson(params);
  report["theta"] = RationalToJson(analysis.theta);
  report["alpha"] = FormatExtended(analysis.alpha);

  auto verified = [&](const EquilibriumProfile& profile) {
    const VerificationReport v = VerifyEquilibrium(
        net, analysis, profile.s1, profile.s2, params, budget);
    if (!v.is_ne || !v.AllChecksPass()) {
      throw std::logic_error("constructed profile failed self-verification");
    }
    return v;
  };

  if (!analysis.alpha) {
    // No s-t path: nothing can be sent, so nothing is worth attacking.
    const EquilibriumProfile profile{DefenderStrategy::Pure(NoFlow()),
                                     AttackerStrategy::Pure(NoAttack()),
                                     Provenance::kNoFlowNoAttack};
    report["region"] = "degenerate";
    report["profile"] = ProfileJson(net, profile);
    report["verification"] = VerificationJson(net, verified(profile));
    Emit(report, opt, out);
    return kOk;
  }

  const Region region = ClassifyRegion(params, analysis.alpha);
  report["region"] = region.Name();
  if (region.tag == RegionTag::kBoundary) {
    if (region.p1_equals_alpha && params.p2 < 1) {
      Json profiles = Json::array();
      for (const EquilibriumProfile& profile :
           BoundaryEquilibria(params, analysis)) {
        Json entry = ProfileJson(net, profile);
        entry["verification"] = VerificationJson(net, verified(profile));
        profiles.push_back(std::move(entry));
      }
      report["profiles"] = std::move(profiles);
      Emit(report, opt, out);
    }
    err << "BoundaryParams: parameters lie on the region boundary "
        << region.Name() << "; closed forms and the mixed construction are "
        << "only stated on open regions\n";
    return kBoundary;
  }

  const EquilibriumProfile profile = ConstructEquilibrium(params, analysis);
  const VerificationReport verification = verified(profile);
  report["profile"] = ProfileJson(net, profile);
  if (region.tag == RegionTag::kIII) {
    Json aggregates;
    aggregates["closed_form"] = AggregatesJson(
        ClosedFormAggregates(params, analysis.alpha, analysis.theta));
    aggregates["measured"] =
        AggregatesJson(MeasuredAggregates(net, profile.s1, profile.s2, params));
    report["aggregates"] = std::move(aggregates);
  } else {
    report["aggregates"] =
        AggregatesJson(MeasuredAggregates(net, profile.s1, profile.s2, params));
  }
  report["verification"] = VerificationJson(net, verification);
  Emit(report, opt, out);
  return kOk;
}

int Verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const Network net = LoadNetwork(opt.network_file);
  const GameParams params = LoadParams(opt);
  const StrategyProfile profile =
      ProfileFromJson(net, ParseJson(ReadFile(opt.profile_file), opt.profile_file));
  if (!profile.s1 || !profile.s2) {
    throw Error(ErrorCode::kParse,
                "profile needs both p1_strategy and p2_strategy");
  }
  const FlowAnalysis analysis = AnalyzeFlows(net);
  const VerificationReport v = VerifyEquilibrium(
      net, analysis, *profile.s1, *profile.s2, params, opt.Budget());
  Json report;
  report["command"] = "verify";
  report["params"] = ParamsJson(params);
  report["verification"] = VerificationJson(net, v);
  Emit(report, opt, out);
  if (!v.is_ne) {
    err << "profile is not a Nash equilibrium (gap1="
        << FormatRational(v.defender_gap)
        << ", gap2=" << FormatRational(v.attacker_gap) << ")\n";
  }
  return v.is_ne ? kOk : kNotEquilibrium;
}

int BestResponse(const Options& opt, std::ostream& out) {
  const Network net = LoadNetwork(opt.network_file);
  const GameParams params = LoadParams(opt);
  const StrategyProfile profile =
      ProfileFromJson(net, ParseJson(ReadFile(opt.profile_file), opt.profile_file));
  Json report;
  report["command"] = "best-response";
  report["player"] = opt.player;
  report["params"] = ParamsJson(params);
  if (opt.player == 1) {
    if (!profile.s2) {
      throw Error(ErrorCode::kParse, "opponent file needs p2_strategy");
    }
    const DefenderResponse r =
        BestResponseDefender(net, *profile.s2, params, opt.Budget());
    report["value"] = RationalToJson(r.value);
    report["flow"] = PathFlowToJson(net, r.argmax);
  } else {
    if (!profile.s1) {
      throw Error(ErrorCode::kParse, "opponent file needs p1_strategy");
    }
    const AttackerResponse r =
        BestResponseAttacker(net, *profile.s1, params, opt.Budget());
    report["value"] = RationalToJson(r.value);
    report["attack"] = AttackToJson(net, r.argmax);
    report["attacks_evaluated"] = r.attacks_evaluated;
  }
  Emit(report, opt, out);
  return kOk;
}

int Maximin(const Options& opt, std::ostream& out) {
  const Network net = LoadNetwork(opt.network_file);
  const GameParams params = LoadParams(opt);
  const FlowAnalysis analysis = AnalyzeFlows(net);
  const SearchBudget budget = opt.Budget();
  Json report;
  report["command"] = "maximin";
  report["params"] = ParamsJson(params);
  const DefenderMaximin d = MaximinDefender(net, params, analysis, budget);
  const AttackerMaximin a = MaximinAttacker(net, params, analysis, budget);
  Json defender;
  defender["value"] = RationalToJson(d.value);
  defender["flow"] = PathFlowToJson(net, d.argmax);
  report["defender_maximin"] = std::move(defender);
  Json attacker;
  attacker["value"] = RationalToJson(a.value);
  attacker["attack"] = AttackToJson(net, a.argmax);
  report["attacker_maximin"] = std::move(attacker);
  try {
    const MinimaxCertificate cert =
        ComputeMinimaxCertificate(net, params, analysis, budget);
    Json minimax;
    minimax["defender_value"] = RationalToJson(cert.defender_value);
    minimax["defender_certificate"] =
        AttackerStrategyToJson(net, cert.defender_certificate);
    minimax["attacker_value"] = RationalToJson(cert.attacker_value);
    minimax["attacker_certificate"] =
        DefenderStrategyToJson(net, cert.attacker_certificate);
    report["minimax"] = std::move(minimax);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kPathBudgetExceeded ||
        e.code() == ErrorCode::kEdgeBudgetExceeded) {
      throw;
    }
    report["minimax"] = "not available: " + std::string(e.what());
  }
  Emit(report, opt, out);
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Routing-versus-interdiction game solver and verifier",
               args.empty() ? "netgame" : args.front()};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-paths", opt.max_paths,
                 "Simple-path budget of the defender oracle");
  app.add_option("--max-attack-edges", opt.max_attack_edges,
                 "Edge budget of attack enumeration");

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--p1", opt.p1, "Defender value per unit of flow")
        ->required();
    sub->add_option("--p2", opt.p2, "Attacker value per unit of lost flow")
        ->required();
  };
  CLI::App* analyze = app.add_subcommand("analyze", "Flow analysis report");
  analyze->add_option("network", opt.network_file)->required();
  CLI::App* solve = app.add_subcommand("solve", "Construct and verify an NE");
  solve->add_option("network", opt.network_file)->required();
  add_params(solve);
  CLI::App* verify = app.add_subcommand("verify", "Verify a strategy profile");
  verify->add_option("network", opt.network_file)->required();
  verify->add_option("profile", opt.profile_file)->required();
  add_params(verify);
  CLI::App* best = app.add_subcommand("best-response", "Best-response oracle");
  best->add_option("network", opt.network_file)->required();
  best->add_option("opponent", opt.profile_file, "Profile file holding the "
                   "opponent's strategy")->required();
  best->add_option("--player", opt.player)->required()->check(CLI::Range(1, 2));
  add_params(best);
  CLI::App* maximin = app.add_subcommand("maximin", "Maximin and minimax");
  maximin->add_option("network", opt.network_file)->required();
  add_params(maximin);
  for (CLI::App* sub : {analyze, solve, verify, best, maximin}) {
    sub->fallthrough();
  }

  std::vector<const char*> argv;
  if (args.empty()) argv.push_back("netgame");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (analyze->parsed()) return Analyze(opt, out);
    if (solve->parsed()) return Solve(opt, out, err);
    if (verify->parsed()) return Verify(opt, out, err);
    if (best->parsed()) return BestResponse(opt, out);
    return Maximin(opt, out);
  } catch (const Error& e) {
    err << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
}

}  // namespace netgame::cli
