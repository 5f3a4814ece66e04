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

// Randomized checks against brute-force oracles on small networks.

#include <gtest/gtest.h>

#include <random>

#include "netgame/equilibrium.h"
#include "netgame/error.h"
#include "netgame/flow.h"
#include "netgame/game.h"
#include "netgame/io.h"
#include "random_strategies.h"
#include "test_util.h"

namespace netgame {
namespace {

using ::netgame::testing::RandomAttack;
using ::netgame::testing::RandomMixed;
using ::netgame::testing::RandomNetwork;
using ::netgame::testing::RandomPathFlow;

constexpr std::uint64_t kSeed = 0x6e6574676d65;

// Cheapest maximum flow by enumerating every integral edge flow.
std::pair<Rational, Rational> BruteForceMinCostMaxFlow(const Network& net) {
  const int m = net.num_edges();
  std::vector<int> x(m, 0);
  std::optional<std::pair<Rational, Rational>> best;
  while (true) {
    std::vector<Rational> excess(net.num_nodes(), Rational(0));
    Rational cost = 0;
    for (const EdgeSpec& e : net.edges()) {
      excess[e.from] -= x[e.id];
      excess[e.to] += x[e.id];
      cost += e.cost * x[e.id];
    }
    bool conserved = true;
    for (NodeIndex v = 0; v < net.num_nodes(); ++v) {
      if (v != net.source() && v != net.sink() && excess[v] != 0) {
        conserved = false;
      }
    }
    if (conserved) {
      const Rational value = excess[net.sink()];
      if (!best || value > best->first ||
          (value == best->first && cost < best->second)) {
        best = {value, cost};
      }
    }
    int k = 0;
    while (k < m && x[k] == net.edge(k).capacity) x[k++] = 0;
    if (k == m) break;
    ++x[k];
  }
  return *best;
}

TEST(PropertyTest, MaxFlowEqualsPartitionMinCut) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const Network net = RandomNetwork(rng, 6, 3, 3);
    const Rational theta = MaxFlow(net).value;
    EXPECT_EQ(theta, testing::BruteForceMinCut(net)) << trial;
    EXPECT_EQ(MinCut(net).capacity, theta) << trial;
    const FlowAnalysis a = AnalyzeFlows(net);
    for (const Cut& c : MinimumCuts(net, a)) EXPECT_EQ(c.capacity, theta);
  }
}

TEST(PropertyTest, MinCostFlowMatchesEnumeration) {
  std::mt19937_64 rng(kSeed + 1);
  int checked = 0;
  while (checked < 60) {
    const Network net = RandomNetwork(rng, 5, 2, 3);
    if (net.num_edges() > 8) continue;
    ++checked;
    const auto [value, cost] = BruteForceMinCostMaxFlow(net);
    for (TieBreak tb : {TieBreak::kLowestEdgeId, TieBreak::kHighestEdgeId}) {
      const MinCostFlowResult r = MinCostMaxFlow(net, tb);
      EXPECT_EQ(r.value, value);
      EXPECT_EQ(r.cost, cost);
      EXPECT_NO_THROW(CheckFeasible(net, r.flow));
      EXPECT_EQ(MinCostMaxFlow(net, tb).flow.amounts, r.flow.amounts);
    }
  }
}

TEST(PropertyTest, DecomposeReconstructsFlows) {
  std::mt19937_64 rng(kSeed + 2);
  for (int trial = 0; trial < 200; ++trial) {
    const Network net = RandomNetwork(rng, 6, 3, 3);
    for (const EdgeFlow& flow :
         {MaxFlow(net).flow, MinCostMaxFlow(net).flow}) {
      const Decomposition d = Decompose(net, flow);
      EdgeFlow rebuilt = ToEdgeFlow(net, d.paths);
      for (const FlowCycle& c : d.cycles) {
        for (EdgeId e : c.edges) rebuilt.amounts[e] += c.amount;
      }
      EXPECT_EQ(rebuilt.amounts, flow.amounts) << trial;
      EXPECT_NO_THROW(ValidatePathFlow(net, d.paths));
    }
  }
}

TEST(PropertyTest, AlphaRoutingMatchesCostIdentity) {
  std::mt19937_64 rng(kSeed + 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Network net = RandomNetwork(rng, 6, 3, 3);
    const FlowAnalysis a = AnalyzeFlows(net);
    if (a.theta == 0) {
      EXPECT_FALSE(a.alpha_routed.has_value());
      continue;
    }
    EXPECT_EQ(*a.alpha_routed, a.min_transport_cost == *a.alpha * a.theta);
    if (*a.alpha_routed) {
      for (const FlowPath& p : a.x_star.paths) {
        EXPECT_EQ(PathCost(net, p.edges), *a.alpha);
      }
    }
  }
}

TEST(PropertyTest, LinkIdentitiesAndFlowSplit) {
  std::mt19937_64 rng(kSeed + 4);
  std::uniform_int_distribution<int> value(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const Network net = RandomNetwork(rng, 6, 3, 3);
    const auto paths = EnumerateSimplePaths(net, 5000);
    const GameParams params =
        GameParams::Make(testing::Frac(value(rng), 2),
                         testing::Frac(value(rng), 3));
    for (int pair = 0; pair < 20; ++pair) {
      const DefenderStrategy s1 = RandomMixed<PathFlow>(
          [&] { return RandomPathFlow(net, paths, rng); }, rng);
      const AttackerStrategy s2 =
          RandomMixed<Attack>([&] { return RandomAttack(net, rng); }, rng);
      ASSERT_NO_THROW(ValidateStrategy(net, s1));
      ASSERT_NO_THROW(ValidateStrategy(net, s2));
      const ExpectedPayoffs u = ComputeExpectedPayoffs(net, s1, s2, params);
      const auto [d1, d2] =
          testing::DirectExpectedPayoffs(net, s1, s2, params.p1, params.p2);
      EXPECT_EQ(u.defender, d1);
      EXPECT_EQ(u.attacker, d2);
      const ProfileExpectations e = ComputeExpectations(net, s1, s2);
      const Rational& p1 = params.p1;
      const Rational& p2 = params.p2;
      EXPECT_EQ(u.defender, p1 * e.initial_flow - e.transport_cost -
                                p1 / p2 * e.attack_cost -
                                p1 / p2 * u.attacker);
      EXPECT_EQ(u.attacker, -e.attack_cost + p2 * e.initial_flow -
                                p2 / p1 * e.transport_cost -
                                p2 / p1 * u.defender);
      for (const auto& a : s1.support) {
        for (const auto& b : s2.support) {
          EXPECT_EQ(Value(EffectiveFlow(a.action, b.action)) +
                        Value(LostFlow(a.action, b.action)),
                    Value(a.action));
        }
      }
    }
  }
}

TEST(PropertyTest, LargerAttacksNeverKeepMoreFlow) {
  std::mt19937_64 rng(kSeed + 5);
  for (int trial = 0; trial < 100; ++trial) {
    const Network net = RandomNetwork(rng, 6, 3, 3);
    const auto paths = EnumerateSimplePaths(net, 5000);
    const PathFlow x = RandomPathFlow(net, paths, rng);
    Attack mu = RandomAttack(net, rng);
    Rational kept = Value(EffectiveFlow(x, mu));
    for (EdgeId e = 0; e < net.num_edges(); ++e) {
      if (mu.Disrupts(e)) continue;
      mu = MakeAttack(net, [&] {
        auto v = mu.disrupted;
        v.push_back(e);
        return v;
      }());
      const Rational now = Value(EffectiveFlow(x, mu));
      EXPECT_LE(now, kept);
      kept = now;
    }
  }
}

TEST(PropertyTest, AttackerBestResponseMatchesFullEnumeration) {
  std::mt19937_64 rng(kSeed + 6);
  std::uniform_int_distribution<int> value(1, 12);
  int checked = 0;
  while (checked < 80) {
    const Network net = RandomNetwork(rng, 5, 3, 3);
    if (net.num_edges() > 10) continue;
    ++checked;
    const auto paths = EnumerateSimplePaths(net, 5000);
    const GameParams params =
        GameParams::Make(testing::Frac(value(rng), 2),
                         testing::Frac(value(rng), 3));
    const DefenderStrategy s1 = RandomMixed<PathFlow>(
        [&] { return RandomPathFlow(net, paths, rng); }, rng);
    const AttackerResponse pruned = BestResponseAttacker(net, s1, params);
    SearchBudget full;
    full.prune_attacks = false;
    const AttackerResponse unpruned =
        BestResponseAttacker(net, s1, params, full);
    const Rational oracle =
        testing::BruteForceAttackerValue(net, s1, params.p1, params.p2);
    EXPECT_EQ(pruned.value, oracle);
    EXPECT_EQ(unpruned.value, oracle);
    EXPECT_EQ(pruned.argmax, unpruned.argmax);
    EXPECT_EQ(unpruned.attacks_evaluated, std::uint64_t{1} << net.num_edges());
  }
}

TEST(PropertyTest, DefenderBestResponseMatchesVertexEnumeration) {
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_int_distribution<int> value(1, 12);
  int checked = 0;
  while (checked < 60) {
    const Network net = RandomNetwork(rng, 5, 3, 3);
    const auto paths = EnumerateSimplePaths(net, 5000);
    if (paths.empty() || paths.size() > 4) continue;
    ++checked;
    const GameParams params =
        GameParams::Make(testing::Frac(value(rng), 2),
                         testing::Frac(value(rng), 3));
    const AttackerStrategy s2 =
        RandomMixed<Attack>([&] { return RandomAttack(net, rng); }, rng);
    // Objective per path: p1 * P(survive) - cost.
    std::vector<Rational> c;
    for (const auto& p : paths) {
      Rational survive = 0;
      for (const auto& b : s2.support) {
        bool hit = false;
        for (EdgeId e : p) hit = hit || b.action.Disrupts(e);
        if (!hit) survive += b.prob;
      }
      c.push_back(params.p1 * survive - PathCost(net, p));
    }
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (const EdgeSpec& e : net.edges()) {
      std::vector<Rational> row;
      for (const auto& p : paths) {
        row.push_back(std::count(p.begin(), p.end(), e.id) ? 1 : 0);
      }
      a.push_back(row);
      b.push_back(e.capacity);
    }
    const auto oracle = testing::VertexEnumerationMax(c, a, b);
    const DefenderResponse r = BestResponseDefender(net, s2, params);
    EXPECT_EQ(r.value, *oracle);
    ASSERT_NO_THROW(ValidatePathFlow(net, r.argmax));
    EXPECT_EQ(testing::DirectExpectedPayoffs(net, DefenderStrategy::Pure(r.argmax),
                                             s2, params.p1, params.p2)
                  .first,
              r.value);
  }
}

TEST(PropertyTest, MixedMinCutProfileIsEquilibrium) {
  std::mt19937_64 rng(kSeed + 8);
  std::uniform_int_distribution<int> extra(1, 9);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const Network net = RandomNetwork(rng, 6, 3, 3);
    const FlowAnalysis a = AnalyzeFlows(net);
    if (!a.alpha_routed.value_or(false)) continue;
    const GameParams params = GameParams::Make(
        *a.alpha + testing::Frac(extra(rng), 2),
        1 + testing::Frac(extra(rng), 4));
    const EquilibriumProfile p = ConstructEquilibrium(params, a);
    VerificationReport v;
    try {
      v = VerifyEquilibrium(net, a, p.s1, p.s2, params);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kPathBudgetExceeded ||
          e.code() == ErrorCode::kEdgeBudgetExceeded) {
        continue;
      }
      throw;
    }
    ++checked;
    EXPECT_TRUE(v.is_ne) << trial;
    for (const PropertyCheck& c : v.checks) {
      EXPECT_NE(c.status, CheckStatus::kFail)
          << trial << " " << c.name << ": " << c.detail;
    }
    EXPECT_EQ(ClosedFormAggregates(params, a.alpha, a.theta),
              MeasuredAggregates(net, p.s1, p.s2, params));
  }
  EXPECT_GE(checked, 30);
}

TEST(PropertyTest, StrippingLoopsNeverHurts) {
  std::mt19937_64 rng(kSeed + 9);
  for (int trial = 0; trial < 100; ++trial) {
    const Network net = testing::MakeNetwork(
        {"s", "a", "b", "t"}, {{"s", "a", 4, 1}, {"a", "b", 4, trial % 3},
                               {"b", "a", 4, trial % 2}, {"a", "t", 4, 1},
                               {"b", "t", 4, 2}});
    std::uniform_int_distribution<int> amount(0, 3);
    EdgeFlow x = EdgeFlow::Zero(net);
    const int direct = amount(rng), via_b = amount(rng) % 2, loop = amount(rng);
    x.amounts = {direct + via_b, via_b + loop, loop, direct, via_b};
    const PathFlow stripped = StripLoops(net, x);
    const GameParams params = GameParams::Make(5, 2);
    const Rational loopy = params.p1 * FlowValue(net, x) -
                           EdgeTransportCost(net, x);
    EXPECT_GE(PayoffDefender(net, stripped, Attack{}, params), loopy);
    EXPECT_EQ(Value(stripped), FlowValue(net, x));
  }
}

TEST(PropertyTest, JsonRoundTrip) {
  std::mt19937_64 rng(kSeed + 10);
  for (int trial = 0; trial < 50; ++trial) {
    const Network net = RandomNetwork(rng, 6, 3, 3);
    const Json json = NetworkToJson(net);
    const Network again = NetworkFromJson(Json::parse(json.dump()));
    EXPECT_EQ(NetworkToJson(again), json);
    const auto paths = EnumerateSimplePaths(net, 5000);
    StrategyProfile profile;
    profile.s1 = RandomMixed<PathFlow>(
        [&] { return RandomPathFlow(net, paths, rng); }, rng);
    profile.s2 =
        RandomMixed<Attack>([&] { return RandomAttack(net, rng); }, rng);
    const Json pj = ProfileToJson(net, profile);
    EXPECT_EQ(ProfileToJson(net, ProfileFromJson(again, Json::parse(pj.dump()))),
              pj);
  }
}

}  // namespace
}  // namespace netgame
