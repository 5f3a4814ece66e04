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

#include "netgame/game.h"

#include <algorithm>

#include "netgame/error.h"
#include "netgame/flow.h"

namespace netgame {

bool Attack::Disrupts(EdgeId id) const {
  return std::binary_search(disrupted.begin(), disrupted.end(), id);
}

Attack MakeAttack(const Network& net, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (EdgeId id : edges) {
    if (id < 0 || id >= net.num_edges()) {
      throw Error(ErrorCode::kInvalidStrategy,
                  "attack names unknown edge id " + std::to_string(id));
    }
  }
  return Attack{std::move(edges)};
}

Attack AttackAll(const Network& net) {
  Attack mu;
  for (EdgeId id = 0; id < net.num_edges(); ++id) mu.disrupted.push_back(id);
  return mu;
}

namespace {

template <typename Action, typename CheckAction>
void ValidateSupport(const MixedStrategy<Action>& s, const char* who,
                     CheckAction check) {
  if (s.support.empty()) {
    throw Error(ErrorCode::kInvalidStrategy,
                std::string(who) + " strategy has empty support");
  }
  Rational total = 0;
  for (std::size_t k = 0; k < s.support.size(); ++k) {
    const auto& w = s.support[k];
    if (w.prob <= 0) {
      throw Error(ErrorCode::kInvalidStrategy,
                  std::string(who) + " support entry " + std::to_string(k) +
                      " has non-positive probability " +
                      FormatRational(w.prob));
    }
    total += w.prob;
    check(w.action);
    for (std::size_t j = 0; j < k; ++j) {
      if (s.support[j].action == w.action) {
        throw Error(ErrorCode::kInvalidStrategy,
                    std::string(who) + " support entries " +
                        std::to_string(j) + " and " + std::to_string(k) +
                        " are the same action");
      }
    }
  }
  if (total != 1) {
    throw Error(ErrorCode::kInvalidStrategy,
                std::string(who) + " probabilities sum to " +
                    FormatRational(total) + ", not 1");
  }
}

bool Hit(const FlowPath& path, const Attack& mu) {
  if (mu.disrupted.empty()) return false;
  for (EdgeId id : path.edges) {
    if (mu.Disrupts(id)) return true;
  }
  return false;
}

}  // namespace

void ValidateStrategy(const Network& net, const DefenderStrategy& s1) {
  ValidateSupport(s1, "defender", [&](const PathFlow& x) {
    ValidatePathFlow(net, x);
    if (!(Canonicalize(x) == x)) {
      throw Error(ErrorCode::kInvalidStrategy,
                  "defender flow lists the same path twice or out of order");
    }
  });
}

void ValidateStrategy(const Network& net, const AttackerStrategy& s2) {
  ValidateSupport(s2, "attacker", [&](const Attack& mu) {
    if (!(MakeAttack(net, mu.disrupted) == mu)) {
      throw Error(ErrorCode::kInvalidStrategy,
                  "attack edge list must be sorted and duplicate-free");
    }
  });
}

GameParams GameParams::Make(Rational p1, Rational p2) {
  p1.canonicalize();
  p2.canonicalize();
  if (p1 <= 0 || p2 <= 0) {
    throw Error(ErrorCode::kInvalidStrategy,
                "p1 and p2 must be positive (got p1=" + FormatRational(p1) +
                    ", p2=" + FormatRational(p2) + ")");
  }
  return GameParams{std::move(p1), std::move(p2)};
}

PathFlow EffectiveFlow(const PathFlow& x, const Attack& mu) {
  PathFlow kept;
  for (const FlowPath& p : x.paths) {
    if (!Hit(p, mu)) kept.paths.push_back(p);
  }
  return kept;
}

PathFlow LostFlow(const PathFlow& x, const Attack& mu) {
  PathFlow lost;
  for (const FlowPath& p : x.paths) {
    if (Hit(p, mu)) lost.paths.push_back(p);
  }
  return lost;
}

Rational TransportCost(const Network& net, const PathFlow& x) {
  Rational cost = 0;
  for (const FlowPath& p : x.paths) cost += p.amount * PathCost(net, p.edges);
  return cost;
}

Rational AttackCost(const Network& net, const Attack& mu) {
  Rational cost = 0;
  for (EdgeId id : mu.disrupted) cost += net.edge(id).capacity;
  return cost;
}

Rational PayoffDefender(const Network& net, const PathFlow& x,
                        const Attack& mu, const GameParams& params) {
  return params.p1 * Value(EffectiveFlow(x, mu)) - TransportCost(net, x);
}

Rational PayoffAttacker(const Network& net, const PathFlow& x,
                        const Attack& mu, const GameParams& params) {
  return params.p2 * Value(LostFlow(x, mu)) - AttackCost(net, mu);
}

ExpectedPayoffs ComputeExpectedPayoffs(const Network& net,
                                       const DefenderStrategy& s1,
                                       const AttackerStrategy& s2,
                                       const GameParams& params) {
  ExpectedPayoffs u{Rational(0), Rational(0)};
  for (const auto& [x, px] : s1.support) {
    for (const auto& [mu, pm] : s2.support) {
      const Rational weight = px * pm;
      u.defender += weight * PayoffDefender(net, x, mu, params);
      u.attacker += weight * PayoffAttacker(net, x, mu, params);
    }
  }
  return u;
}

ProfileExpectations ComputeExpectations(const Network& net,
                                        const DefenderStrategy& s1,
                                        const AttackerStrategy& s2) {
  ProfileExpectations e{Rational(0), Rational(0), Rational(0), Rational(0),
                        Rational(0)};
  for (const auto& [x, px] : s1.support) {
    e.initial_flow += px * Value(x);
    e.transport_cost += px * TransportCost(net, x);
  }
  for (const auto& [mu, pm] : s2.support) {
    e.attack_cost += pm * AttackCost(net, mu);
  }
  for (const auto& [x, px] : s1.support) {
    for (const auto& [mu, pm] : s2.support) {
      e.effective_flow += px * pm * Value(EffectiveFlow(x, mu));
      e.lost_flow += px * pm * Value(LostFlow(x, mu));
    }
  }
  return e;
}

PathFlow StripLoops(const Network& net, const EdgeFlow& x) {
  return Decompose(net, x).paths;
}

}  // namespace netgame
