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

#include "netgame/equilibrium.h"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "netgame/error.h"
#include "netgame/lp.h"

namespace netgame {

std::string Region::Name() const {
  switch (tag) {
    case RegionTag::kI: return "I";
    case RegionTag::kII: return "II";
    case RegionTag::kIII: return "III";
    case RegionTag::kBoundary: break;
  }
  std::string name = "boundary(";
  if (p1_equals_alpha) name += "p1=alpha";
  if (p1_equals_alpha && p2_equals_one) name += ",";
  if (p2_equals_one) name += "p2=1";
  return name + ")";
}

Region ClassifyRegion(const GameParams& params, const ExtendedRational& alpha) {
  if (!alpha) {
    throw Error(ErrorCode::kAlphaInfinite,
                "no s-t path: the only outcome is no flow and no attack");
  }
  Region region;
  region.p1_equals_alpha = params.p1 == *alpha;
  region.p2_equals_one = params.p2 == 1;
  if (params.p1 < *alpha) {
    region.tag = RegionTag::kI;
    region.p2_equals_one = false;
  } else if (region.p1_equals_alpha) {
    region.tag = RegionTag::kBoundary;
  } else if (params.p2 < 1) {
    region.tag = RegionTag::kII;
  } else if (params.p2 > 1) {
    region.tag = RegionTag::kIII;
  } else {
    region.tag = RegionTag::kBoundary;
  }
  return region;
}

std::string ProvenanceName(Provenance provenance) {
  switch (provenance) {
    case Provenance::kNoFlowNoAttack: return "no_flow_no_attack";
    case Provenance::kMaxFlowNoAttack: return "max_flow_no_attack";
    case Provenance::kMixedMinCut: return "mixed_min_cut";
    case Provenance::kUserSupplied: return "user_supplied";
  }
  return "unknown";
}

std::string CheckStatusName(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotApplicable: return "not_applicable";
  }
  return "unknown";
}

Attack CutAttack(const Cut& cut) { return Attack{cut.cut_set}; }

namespace {

bool InRegion(const Region& region, RegionTag tag) { return region.tag == tag; }

EquilibriumProfile PureProfile(PathFlow x, Attack mu, Provenance provenance) {
  return EquilibriumProfile{DefenderStrategy::Pure(std::move(x)),
                            AttackerStrategy::Pure(std::move(mu)), provenance};
}

}  // namespace

EquilibriumProfile MixedMinCutProfile(const GameParams& params,
                                      const FlowAnalysis& analysis) {
  const Region region = ClassifyRegion(params, analysis.alpha);
  if (!InRegion(region, RegionTag::kIII)) {
    throw Error(ErrorCode::kWrongRegion,
                "the mixed min-cut profile needs p1 > alpha and p2 > 1 "
                "(region " + region.Name() + ")");
  }
  const Rational& alpha = *analysis.alpha;
  EquilibriumProfile profile;
  profile.provenance = Provenance::kMixedMinCut;
  profile.s1.support = {{NoFlow(), Rational(1 - 1 / params.p2)},
                        {analysis.x_star, Rational(1 / params.p2)}};
  // With a zero-cost shortest path alpha/p1 vanishes and the attacker
  // plays the cut with certainty.
  if (alpha > 0) {
    profile.s2.support.push_back({NoAttack(), Rational(alpha / params.p1)});
  }
  profile.s2.support.push_back(
      {CutAttack(analysis.min_cut), Rational(1 - alpha / params.p1)});
  return profile;
}

EquilibriumProfile ConstructEquilibrium(const GameParams& params,
                                        const FlowAnalysis& analysis) {
  const Region region = ClassifyRegion(params, analysis.alpha);
  switch (region.tag) {
    case RegionTag::kI:
      return PureProfile(NoFlow(), NoAttack(), Provenance::kNoFlowNoAttack);
    case RegionTag::kII:
      return PureProfile(analysis.x_star, NoAttack(),
                         Provenance::kMaxFlowNoAttack);
    case RegionTag::kIII:
      if (!analysis.alpha_routed.value_or(false)) {
        throw Error(ErrorCode::kNotAlphaRouted,
                    "no minimum-cost maximum flow routes only along cost-" +
                        FormatExtended(analysis.alpha) +
                        " paths; the mixed min-cut equilibrium does not "
                        "exist for this network");
      }
      return MixedMinCutProfile(params, analysis);
    case RegionTag::kBoundary:
      break;
  }
  throw Error(ErrorCode::kBoundary,
              "parameters lie on the region boundary " + region.Name());
}

std::vector<EquilibriumProfile> BoundaryEquilibria(
    const GameParams& params, const FlowAnalysis& analysis) {
  const Region region = ClassifyRegion(params, analysis.alpha);
  if (!(region.tag == RegionTag::kBoundary && region.p1_equals_alpha &&
        params.p2 < 1)) {
    throw Error(ErrorCode::kBoundary,
                "no equilibrium construction for region " + region.Name());
  }
  return {PureProfile(NoFlow(), NoAttack(), Provenance::kNoFlowNoAttack),
          PureProfile(analysis.x_star, NoAttack(),
                      Provenance::kMaxFlowNoAttack)};
}

EquilibriumAggregates ClosedFormAggregates(const GameParams& params,
                                           const ExtendedRational& alpha,
                                           const Rational& theta) {
  const Region region = ClassifyRegion(params, alpha);
  if (!InRegion(region, RegionTag::kIII)) {
    throw Error(ErrorCode::kWrongRegion,
                "closed forms hold only for p1 > alpha and p2 > 1 (region " +
                    region.Name() + ")");
  }
  const Rational& a = *alpha;
  const Rational& p1 = params.p1;
  const Rational& p2 = params.p2;
  EquilibriumAggregates agg;
  agg.defender_payoff = 0;
  agg.attacker_payoff = 0;
  agg.initial_flow = theta / p2;
  agg.transport_cost = a * theta / p2;
  agg.attack_cost = (1 - a / p1) * theta;
  agg.effective_flow = a * theta / (p1 * p2);
  agg.lost_flow = (1 - a / p1) * theta / p2;
  agg.yield = Rational(a / p1);
  return agg;
}

EquilibriumAggregates MeasuredAggregates(const Network& net,
                                         const DefenderStrategy& s1,
                                         const AttackerStrategy& s2,
                                         const GameParams& params) {
  const ExpectedPayoffs u = ComputeExpectedPayoffs(net, s1, s2, params);
  const ProfileExpectations e = ComputeExpectations(net, s1, s2);
  EquilibriumAggregates agg;
  agg.defender_payoff = u.defender;
  agg.attacker_payoff = u.attacker;
  agg.initial_flow = e.initial_flow;
  agg.transport_cost = e.transport_cost;
  agg.attack_cost = e.attack_cost;
  agg.effective_flow = e.effective_flow;
  agg.lost_flow = e.lost_flow;
  if (e.initial_flow != 0) agg.yield = Rational(e.effective_flow / e.initial_flow);
  return agg;
}

namespace {

void ExtendPaths(const Network& net, NodeIndex v, std::vector<bool>& visited,
                 std::vector<EdgeId>& current,
                 std::vector<std::vector<EdgeId>>& out, std::size_t max_paths) {
  if (v == net.sink()) {
    if (out.size() >= max_paths) {
      throw Error(ErrorCode::kPathBudgetExceeded,
                  "more than " + std::to_string(max_paths) +
                      " simple s-t paths; raise --max-paths");
    }
    out.push_back(current);
    return;
  }
  for (EdgeId id : net.out_edges(v)) {
    const EdgeSpec& e = net.edge(id);
    if (e.capacity <= 0 || visited[e.to]) continue;
    visited[e.to] = true;
    current.push_back(id);
    ExtendPaths(net, e.to, visited, current, out, max_paths);
    current.pop_back();
    visited[e.to] = false;
  }
}

}  // namespace

std::vector<std::vector<EdgeId>> EnumerateSimplePaths(const Network& net,
                                                      std::size_t max_paths) {
  std::vector<std::vector<EdgeId>> paths;
  std::vector<bool> visited(net.num_nodes(), false);
  std::vector<EdgeId> current;
  visited[net.source()] = true;
  ExtendPaths(net, net.source(), visited, current, paths, max_paths);
  return paths;
}

DefenderResponse BestResponseDefender(const Network& net,
                                      const AttackerStrategy& s2,
                                      const GameParams& params,
                                      const SearchBudget& budget) {
  ValidateStrategy(net, s2);
  const auto paths = EnumerateSimplePaths(net, budget.max_paths);

  std::vector<std::size_t> paying;
  std::vector<Rational> weights;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    Rational survival = 0;
    for (const auto& [mu, prob] : s2.support) {
      const bool hit = std::any_of(paths[k].begin(), paths[k].end(),
                                   [&](EdgeId id) { return mu.Disrupts(id); });
      if (!hit) survival += prob;
    }
    Rational w = params.p1 * survival - PathCost(net, paths[k]);
    if (w > 0) {
      paying.push_back(k);
      weights.push_back(std::move(w));
    }
  }
  DefenderResponse response{Rational(0), NoFlow()};
  if (paying.empty()) return response;

  LinearProgram lp;
  lp.maximize = true;
  lp.objective = weights;
  for (const EdgeSpec& e : net.edges()) {
    LinearConstraint row;
    row.coefficients.assign(paying.size(), Rational(0));
    bool used = false;
    for (std::size_t j = 0; j < paying.size(); ++j) {
      const auto& p = paths[paying[j]];
      if (std::find(p.begin(), p.end(), e.id) != p.end()) {
        row.coefficients[j] = 1;
        used = true;
      }
    }
    if (!used) continue;
    row.relation = Relation::kLessEqual;
    row.rhs = e.capacity;
    lp.constraints.push_back(std::move(row));
  }
  const LpSolution solution = SolveLinearProgram(lp);
  if (solution.status != LpStatus::kOptimal) {
    throw std::logic_error("path packing LP is bounded and feasible");
  }
  response.value = solution.objective;
  for (std::size_t j = 0; j < paying.size(); ++j) {
    if (solution.values[j] > 0) {
      response.argmax.paths.push_back({paths[paying[j]], solution.values[j]});
    }
  }
  response.argmax = Canonicalize(std::move(response.argmax));
  return response;
}

AttackerResponse BestResponseAttacker(const Network& net,
                                      const DefenderStrategy& s1,
                                      const GameParams& params,
                                      const SearchBudget& budget) {
  ValidateStrategy(net, s1);
  EdgeFlow expected = EdgeFlow::Zero(net);
  for (const auto& [x, prob] : s1.support) {
    for (const FlowPath& p : x.paths) {
      for (EdgeId id : p.edges) expected.amounts[id] += prob * p.amount;
    }
  }
  std::vector<EdgeId> candidates;
  for (EdgeId id = 0; id < net.num_edges(); ++id) {
    if (!budget.prune_attacks || expected.amounts[id] > 0) {
      candidates.push_back(id);
    }
  }
  if (candidates.size() > budget.max_attack_edges || candidates.size() > 62) {
    throw Error(ErrorCode::kEdgeBudgetExceeded,
                std::to_string(candidates.size()) +
                    " attackable edges exceed the budget of " +
                    std::to_string(budget.max_attack_edges) +
                    "; raise --max-attack-edges");
  }
  std::vector<int> bit(net.num_edges(), -1);
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    bit[candidates[k]] = static_cast<int>(k);
  }
  // Expected amount on each distinct candidate-edge footprint.
  std::map<std::uint64_t, Rational> footprint;
  for (const auto& [x, prob] : s1.support) {
    for (const FlowPath& p : x.paths) {
      std::uint64_t mask = 0;
      for (EdgeId id : p.edges) {
        if (bit[id] >= 0) mask |= std::uint64_t{1} << bit[id];
      }
      footprint[mask] += prob * p.amount;
    }
  }
  std::vector<Rational> capacity;
  for (EdgeId id : candidates) capacity.push_back(net.edge(id).capacity);

  auto attack_of = [&](std::uint64_t mask) {
    Attack mu;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (mask >> k & 1) mu.disrupted.push_back(candidates[k]);
    }
    return mu;
  };

  AttackerResponse response{Rational(0), NoAttack(), 0};
  std::uint64_t best_mask = 0;
  bool have_best = false;
  const std::uint64_t count = std::uint64_t{1} << candidates.size();
  Rational lost;
  Rational cost;
  Rational value;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    lost = 0;
    for (const auto& [footprint_mask, amount] : footprint) {
      if (footprint_mask & mask) lost += amount;
    }
    cost = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      cost += capacity[std::countr_zero(rest)];
    }
    value = params.p2 * lost - cost;
    bool take = !have_best || value > response.value;
    if (!take && value == response.value) {
      take = attack_of(mask) < attack_of(best_mask);
    }
    if (take) {
      response.value = value;
      best_mask = mask;
      have_best = true;
    }
  }
  response.argmax = attack_of(best_mask);
  response.attacks_evaluated = count;
  return response;
}

bool VerificationReport::AllChecksPass() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) {
    return c.status != CheckStatus::kFail;
  });
}

Rational MinimumOverOptimalFlows(const Network& net,
                                 const FlowAnalysis& analysis, EdgeId edge) {
  const int m = net.num_edges();
  LinearProgram lp;
  lp.maximize = false;
  lp.objective.assign(m, Rational(0));
  lp.objective[edge] = 1;
  for (const EdgeSpec& e : net.edges()) {
    LinearConstraint row;
    row.coefficients.assign(m, Rational(0));
    row.coefficients[e.id] = 1;
    row.relation = Relation::kLessEqual;
    row.rhs = e.capacity;
    lp.constraints.push_back(std::move(row));
  }
  for (NodeIndex v = 0; v < net.num_nodes(); ++v) {
    if (v == net.source()) continue;
    LinearConstraint row;
    row.coefficients.assign(m, Rational(0));
    for (EdgeId id : net.in_edges(v)) row.coefficients[id] += 1;
    for (EdgeId id : net.out_edges(v)) row.coefficients[id] -= 1;
    row.relation = Relation::kEqual;
    row.rhs = v == net.sink() ? analysis.theta : Rational(0);
    lp.constraints.push_back(std::move(row));
  }
  LinearConstraint cost_row;
  cost_row.coefficients.assign(m, Rational(0));
  for (const EdgeSpec& e : net.edges()) cost_row.coefficients[e.id] = e.cost;
  cost_row.relation = Relation::kEqual;
  cost_row.rhs = analysis.min_transport_cost;
  lp.constraints.push_back(std::move(cost_row));

  const LpSolution solution = SolveLinearProgram(lp);
  if (solution.status != LpStatus::kOptimal) {
    throw std::logic_error("optimal face of the min-cost flow problem is empty");
  }
  return solution.objective;
}

bool SaturatedByEveryOptimalFlow(const Network& net,
                                 const FlowAnalysis& analysis, EdgeId edge) {
  return MinimumOverOptimalFlows(net, analysis, edge) ==
         net.edge(edge).capacity;
}

std::vector<Cut> MinimumCuts(const Network& net, const FlowAnalysis& analysis,
                             int max_nodes) {
  std::vector<Cut> cuts;
  const int n = net.num_nodes();
  if (n <= max_nodes) {
    std::vector<NodeIndex> free_nodes;
    for (NodeIndex v = 0; v < n; ++v) {
      if (v != net.source() && v != net.sink()) free_nodes.push_back(v);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_nodes.size());
         ++mask) {
      std::vector<bool> in_s(n, false);
      in_s[net.source()] = true;
      for (std::size_t k = 0; k < free_nodes.size(); ++k) {
        if (mask >> k & 1) in_s[free_nodes[k]] = true;
      }
      Cut cut = MakeCut(net, in_s);
      if (cut.capacity == analysis.theta) cuts.push_back(std::move(cut));
    }
    return cuts;
  }
  cuts.push_back(analysis.min_cut);
  // Sink side: nodes that can still reach the sink in the residual graph.
  std::vector<bool> reaches(n, false);
  reaches[net.sink()] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const EdgeSpec& e : net.edges()) {
      const Rational& x = analysis.x_star_edges.amounts[e.id];
      if (reaches[e.to] && !reaches[e.from] && x < e.capacity) {
        reaches[e.from] = changed = true;
      }
      if (reaches[e.from] && !reaches[e.to] && x > 0) {
        reaches[e.to] = changed = true;
      }
    }
  }
  std::vector<bool> in_s(n);
  for (NodeIndex v = 0; v < n; ++v) in_s[v] = !reaches[v];
  Cut sink_side = MakeCut(net, in_s);
  if (sink_side.cut_set != analysis.min_cut.cut_set) {
    cuts.push_back(std::move(sink_side));
  }
  return cuts;
}

namespace {

bool DisconnectsSourceFromSink(const Network& net, const Attack& mu) {
  std::vector<bool> seen(net.num_nodes(), false);
  std::vector<NodeIndex> stack{net.source()};
  seen[net.source()] = true;
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    for (EdgeId id : net.out_edges(v)) {
      NodeIndex w = net.edge(id).to;
      if (seen[w] || mu.Disrupts(id)) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return !seen[net.sink()];
}

PropertyCheck Check(std::string name, bool ok, std::string detail) {
  return PropertyCheck{std::move(name),
                       ok ? CheckStatus::kPass : CheckStatus::kFail,
                       std::move(detail)};
}

PropertyCheck CompareQuantity(const std::string& name, const Rational& measured,
                              const Rational& expected) {
  return Check(name, measured == expected,
               "measured " + FormatRational(measured) + ", expected " +
                   FormatRational(expected));
}

std::vector<PropertyCheck> StructuralChecks(const Network& net,
                                            const FlowAnalysis& analysis,
                                            const DefenderStrategy& s1,
                                            const AttackerStrategy& s2,
                                            const GameParams& params) {
  const Rational& alpha = *analysis.alpha;
  const Rational& theta = analysis.theta;
  std::vector<PropertyCheck> checks;

  const EquilibriumAggregates closed =
      ClosedFormAggregates(params, analysis.alpha, theta);
  const EquilibriumAggregates measured = MeasuredAggregates(net, s1, s2, params);
  checks.push_back(Check("payoffs_zero",
                         measured.defender_payoff == 0 &&
                             measured.attacker_payoff == 0,
                         "U1=" + FormatRational(measured.defender_payoff) +
                             ", U2=" + FormatRational(measured.attacker_payoff)));
  checks.push_back(CompareQuantity("expected_initial_flow",
                                   measured.initial_flow, closed.initial_flow));
  checks.push_back(CompareQuantity("expected_transport_cost",
                                   measured.transport_cost,
                                   closed.transport_cost));
  checks.push_back(CompareQuantity("expected_attack_cost", measured.attack_cost,
                                   closed.attack_cost));
  checks.push_back(CompareQuantity("expected_effective_flow",
                                   measured.effective_flow,
                                   closed.effective_flow));
  checks.push_back(CompareQuantity("expected_lost_flow", measured.lost_flow,
                                   closed.lost_flow));
  checks.push_back(CompareQuantity("yield", measured.yield.value_or(0),
                                   *closed.yield));

  // E_{sigma2}[F((x*)^mu)] = theta - E[C2].
  Rational surviving = 0;
  for (const auto& [mu, prob] : s2.support) {
    surviving += prob * Value(EffectiveFlow(analysis.x_star, mu));
  }
  checks.push_back(CompareQuantity("effective_optimal_flow_identity", surviving,
                                   theta - measured.attack_cost));

  // Supported attacks never cost more than a minimum cut.
  {
    bool ok = true;
    std::string detail = "max supported attack cost ";
    Rational worst = 0;
    for (const auto& [mu, prob] : s2.support) {
      const Rational c = AttackCost(net, mu);
      if (c > worst) worst = c;
      ok = ok && c <= theta;
    }
    checks.push_back(Check("attack_cost_at_most_theta", ok,
                           detail + FormatRational(worst) + " vs theta " +
                               FormatRational(theta)));
  }

  // Disrupted edges are saturated by every minimum-cost maximum flow.
  {
    std::vector<EdgeId> disrupted;
    for (const auto& [mu, prob] : s2.support) {
      disrupted.insert(disrupted.end(), mu.disrupted.begin(),
                       mu.disrupted.end());
    }
    std::sort(disrupted.begin(), disrupted.end());
    disrupted.erase(std::unique(disrupted.begin(), disrupted.end()),
                    disrupted.end());
    bool ok = true;
    std::string detail;
    for (EdgeId id : disrupted) {
      const Rational low = MinimumOverOptimalFlows(net, analysis, id);
      if (low != net.edge(id).capacity) {
        ok = false;
        detail += net.EdgeLabel(id) + " min over optima " +
                  FormatRational(low) + " < capacity; ";
      }
    }
    if (ok) {
      detail = std::to_string(disrupted.size()) +
               " disrupted edges saturated by every optimal flow";
    }
    checks.push_back(Check("disrupted_edges_saturated", ok, detail));
  }

  const std::vector<Cut> cuts = MinimumCuts(net, analysis);
  EdgeFlow expected = EdgeFlow::Zero(net);
  for (const auto& [x, prob] : s1.support) {
    const EdgeFlow edges = ToEdgeFlow(net, x);
    for (EdgeId id = 0; id < net.num_edges(); ++id) {
      expected.amounts[id] += prob * edges.amounts[id];
    }
  }

  // E[x_ij] = c_ij / p2 on every min-cut edge.
  {
    bool ok = true;
    std::string detail;
    for (const Cut& cut : cuts) {
      for (EdgeId id : cut.cut_set) {
        const Rational want = net.edge(id).capacity / params.p2;
        if (expected.amounts[id] != want) {
          ok = false;
          detail += net.EdgeLabel(id) + " E[x]=" +
                    FormatRational(expected.amounts[id]) + " != " +
                    FormatRational(want) + "; ";
        }
      }
    }
    if (ok) detail = "checked " + std::to_string(cuts.size()) + " minimum cuts";
    checks.push_back(Check("min_cut_expected_flow", ok, detail));
  }

  // Uniform disruption probability 1 - alpha/p1 on the positive-capacity
  // edges of any min cut containing every disrupted edge. Disrupting a
  // zero-capacity edge is free and changes nothing, so it is unconstrained.
  {
    std::vector<bool> disrupted(net.num_edges(), false);
    for (const auto& [mu, prob] : s2.support) {
      for (EdgeId id : mu.disrupted) disrupted[id] = true;
    }
    const Rational want = 1 - alpha / params.p1;
    int applicable = 0;
    bool ok = true;
    std::string detail;
    for (const Cut& cut : cuts) {
      std::vector<bool> in_cut(net.num_edges(), false);
      for (EdgeId id : cut.cut_set) in_cut[id] = true;
      bool covers = true;
      for (EdgeId id = 0; id < net.num_edges(); ++id) {
        if (disrupted[id] && !in_cut[id]) covers = false;
      }
      if (!covers) continue;
      ++applicable;
      for (EdgeId id : cut.cut_set) {
        if (net.edge(id).capacity == 0) continue;
        Rational p = 0;
        for (const auto& [mu, prob] : s2.support) {
          if (mu.Disrupts(id)) p += prob;
        }
        if (p != want) {
          ok = false;
          detail += net.EdgeLabel(id) + " disrupted w.p. " + FormatRational(p) +
                    "; ";
        }
      }
    }
    if (applicable == 0) {
      checks.push_back({"uniform_disruption_probability",
                        CheckStatus::kNotApplicable,
                        "supported attacks are not contained in one minimum cut"});
    } else {
      if (ok) {
        detail = "every edge of " + std::to_string(applicable) +
                 " covering minimum cut(s) disrupted w.p. " +
                 FormatRational(want);
      }
      checks.push_back(Check("uniform_disruption_probability", ok, detail));
    }
  }

  // Every positive-capacity min-cut edge carries flow in some supported
  // defender action. A zero-capacity edge can carry nothing.
  {
    bool ok = true;
    std::string detail;
    std::vector<bool> reported(net.num_edges(), false);
    for (const Cut& cut : cuts) {
      for (EdgeId id : cut.cut_set) {
        if (net.edge(id).capacity == 0 || reported[id]) continue;
        bool carried = false;
        for (const auto& [x, prob] : s1.support) {
          for (const FlowPath& p : x.paths) {
            if (std::find(p.edges.begin(), p.edges.end(), id) != p.edges.end()) {
              carried = true;
            }
          }
        }
        if (!carried) {
          ok = false;
          reported[id] = true;
          detail += net.EdgeLabel(id) + " carries no supported flow; ";
        }
      }
    }
    if (ok) detail = "checked " + std::to_string(cuts.size()) + " minimum cuts";
    checks.push_back(Check("min_cut_edges_carried", ok, detail));
  }

  // Probability bounds for x0, optimal alpha-routed flows, mu0 and min-cut
  // attacks wherever they appear in the support.
  {
    bool ok = true;
    int bounded = 0;
    std::string detail;
    auto bound = [&](const std::string& what, const Rational& prob,
                     const Rational& limit) {
      ++bounded;
      if (prob > limit) {
        ok = false;
        detail += what + " w.p. " + FormatRational(prob) + " > " +
                  FormatRational(limit) + "; ";
      }
    };
    for (const auto& [x, prob] : s1.support) {
      if (x.paths.empty()) {
        bound("x0", prob, 1 - 1 / params.p2);
      } else if (Value(x) == theta &&
                 TransportCost(net, x) == analysis.min_transport_cost) {
        bound("optimal flow", prob, 1 / params.p2);
      }
    }
    for (const auto& [mu, prob] : s2.support) {
      if (mu.disrupted.empty()) {
        bound("mu0", prob, alpha / params.p1);
      } else if (AttackCost(net, mu) == theta &&
                 DisconnectsSourceFromSink(net, mu)) {
        bound("min-cut attack", prob, 1 - alpha / params.p1);
      }
    }
    if (bounded == 0) {
      checks.push_back({"probability_bounds", CheckStatus::kNotApplicable,
                        "no bounded action in the support"});
    } else {
      if (ok) detail = std::to_string(bounded) + " bounded actions within limits";
      checks.push_back(Check("probability_bounds", ok, detail));
    }
  }
  return checks;
}

}  // namespace

VerificationReport VerifyEquilibrium(const Network& net,
                                     const FlowAnalysis& analysis,
                                     const DefenderStrategy& s1,
                                     const AttackerStrategy& s2,
                                     const GameParams& params,
                                     const SearchBudget& budget) {
  ValidateStrategy(net, s1);
  ValidateStrategy(net, s2);
  VerificationReport report;
  report.payoffs = ComputeExpectedPayoffs(net, s1, s2, params);
  report.defender_response = BestResponseDefender(net, s2, params, budget);
  report.attacker_response = BestResponseAttacker(net, s1, params, budget);
  report.defender_gap = report.defender_response.value - report.payoffs.defender;
  report.attacker_gap = report.attacker_response.value - report.payoffs.attacker;
  if (report.defender_gap < 0 || report.attacker_gap < 0) {
    throw std::logic_error("best response worse than the profile itself");
  }
  report.is_ne = report.defender_gap == 0 && report.attacker_gap == 0;
  if (analysis.alpha) report.region = ClassifyRegion(params, analysis.alpha);
  if (report.is_ne && report.region &&
      report.region->tag == RegionTag::kIII &&
      analysis.alpha_routed.value_or(false)) {
    report.checks = StructuralChecks(net, analysis, s1, s2, params);
  }
  return report;
}

namespace {

// Defender actions probed by the maximin enumerations: x0 first, then x*,
// then each simple path loaded to its bottleneck.
std::vector<PathFlow> ProbeFlows(const Network& net,
                                 const FlowAnalysis& analysis,
                                 const SearchBudget& budget) {
  std::vector<PathFlow> flows{NoFlow()};
  if (!analysis.x_star.paths.empty()) flows.push_back(analysis.x_star);
  for (auto& path : EnumerateSimplePaths(net, budget.max_paths)) {
    Rational amount = PathBottleneck(net, path);
    flows.push_back(PathFlow{{FlowPath{std::move(path), std::move(amount)}}});
  }
  return flows;
}

}  // namespace

DefenderMaximin MaximinDefender(const Network& net, const GameParams& params,
                                const FlowAnalysis& analysis,
                                const SearchBudget& budget) {
  std::optional<DefenderMaximin> best;
  for (PathFlow& x : ProbeFlows(net, analysis, budget)) {
    // Only edges x uses can change u1.
    std::vector<EdgeId> used;
    for (const FlowPath& p : x.paths) {
      used.insert(used.end(), p.edges.begin(), p.edges.end());
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (used.size() > budget.max_attack_edges || used.size() > 62) {
      throw Error(ErrorCode::kEdgeBudgetExceeded,
                  std::to_string(used.size()) +
                      " attackable edges exceed the budget of " +
                      std::to_string(budget.max_attack_edges));
    }
    std::optional<Rational> worst;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << used.size());
         ++mask) {
      Attack mu;
      for (std::size_t k = 0; k < used.size(); ++k) {
        if (mask >> k & 1) mu.disrupted.push_back(used[k]);
      }
      Rational u = PayoffDefender(net, x, mu, params);
      if (!worst || u < *worst) worst = u;
    }
    if (!best || *worst > best->value) {
      best = DefenderMaximin{*worst, std::move(x)};
    }
  }
  return *best;
}

AttackerMaximin MaximinAttacker(const Network& net, const GameParams& params,
                                const FlowAnalysis& analysis,
                                const SearchBudget& budget) {
  const std::size_t m = net.num_edges();
  if (m > budget.max_attack_edges || m > 62) {
    throw Error(ErrorCode::kEdgeBudgetExceeded,
                std::to_string(m) + " edges exceed the budget of " +
                    std::to_string(budget.max_attack_edges));
  }
  const std::vector<PathFlow> flows = ProbeFlows(net, analysis, budget);
  std::optional<AttackerMaximin> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Attack mu;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask >> k & 1) mu.disrupted.push_back(static_cast<EdgeId>(k));
    }
    std::optional<Rational> worst;
    for (const PathFlow& x : flows) {
      Rational u = PayoffAttacker(net, x, mu, params);
      if (!worst || u < *worst) worst = u;
    }
    if (!best || *worst > best->value ||
        (*worst == best->value && mu < best->argmax)) {
      best = AttackerMaximin{*worst, std::move(mu)};
    }
  }
  return *best;
}

MinimaxCertificate ComputeMinimaxCertificate(const Network& net,
                                             const GameParams& params,
                                             const FlowAnalysis& analysis,
                                             const SearchBudget& budget) {
  const Region region = ClassifyRegion(params, analysis.alpha);
  MinimaxCertificate cert;
  if (region.tag == RegionTag::kI) {
    cert.defender_certificate = AttackerStrategy::Pure(NoAttack());
    cert.attacker_certificate = DefenderStrategy::Pure(NoFlow());
  } else if (region.tag == RegionTag::kIII) {
    if (!analysis.alpha_routed.value_or(false)) {
      throw Error(ErrorCode::kNotAlphaRouted,
                  "minimax certificates need a minimum-cost maximum flow "
                  "routed along alpha-cost paths");
    }
    const EquilibriumProfile mixed = MixedMinCutProfile(params, analysis);
    cert.defender_certificate = mixed.s2;
    cert.attacker_certificate = mixed.s1;
  } else {
    throw Error(ErrorCode::kWrongRegion,
                "minimax certificates are available in regions I and III "
                "(region " + region.Name() + ")");
  }
  cert.defender_value =
      BestResponseDefender(net, cert.defender_certificate, params, budget).value;
  cert.attacker_value =
      BestResponseAttacker(net, cert.attacker_certificate, params, budget).value;
  return cert;
}

}  // namespace netgame
