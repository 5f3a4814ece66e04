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

#ifndef NETGAME_GAME_H_
#define NETGAME_GAME_H_

#include <compare>
#include <string>
#include <vector>

#include "netgame/network.h"
#include "netgame/path_flow.h"
#include "netgame/rational.h"

namespace netgame {

// The set of disrupted edges. Kept sorted and duplicate-free, so the
// default ordering is the lexicographic order used for tie-breaking.
struct Attack {
  std::vector<EdgeId> disrupted;

  bool Disrupts(EdgeId id) const;

  auto operator<=>(const Attack&) const = default;
  bool operator==(const Attack&) const = default;
};

// Sorts and deduplicates; throws kInvalidStrategy for unknown edge ids.
Attack MakeAttack(const Network& net, std::vector<EdgeId> edges);
Attack AttackAll(const Network& net);

template <typename Action>
struct Weighted {
  Action action;
  Rational prob;
};

// Finite-support mixed strategy.
template <typename Action>
struct MixedStrategy {
  std::vector<Weighted<Action>> support;

  static MixedStrategy Pure(Action action) {
    return MixedStrategy{{Weighted<Action>{std::move(action), Rational(1)}}};
  }
};

using DefenderStrategy = MixedStrategy<PathFlow>;
using AttackerStrategy = MixedStrategy<Attack>;

// Probabilities positive, summing to exactly one, actions pairwise distinct
// and individually valid. Throws kInvalidStrategy (kLoopyFlow for flows
// that contain a loop).
void ValidateStrategy(const Network& net, const DefenderStrategy& s1);
void ValidateStrategy(const Network& net, const AttackerStrategy& s2);

struct GameParams {
  Rational p1;  // defender's value per unit of effective flow
  Rational p2;  // attacker's value per unit of lost flow

  // Throws kInvalidStrategy unless both are positive.
  static GameParams Make(Rational p1, Rational p2);
};

// Paths of x avoiding every disrupted edge, amounts unchanged.
PathFlow EffectiveFlow(const PathFlow& x, const Attack& mu);
// Paths of x hit by the attack.
PathFlow LostFlow(const PathFlow& x, const Attack& mu);

// C1(x) = sum over paths of amount * path cost.
Rational TransportCost(const Network& net, const PathFlow& x);
// C2(mu) = sum of capacities of the disrupted edges.
Rational AttackCost(const Network& net, const Attack& mu);

// p1 * F(x^mu) - C1(x)
Rational PayoffDefender(const Network& net, const PathFlow& x,
                        const Attack& mu, const GameParams& params);
// p2 * (F(x) - F(x^mu)) - C2(mu)
Rational PayoffAttacker(const Network& net, const PathFlow& x,
                        const Attack& mu, const GameParams& params);

struct ExpectedPayoffs {
  Rational defender;  // U1
  Rational attacker;  // U2
};

ExpectedPayoffs ComputeExpectedPayoffs(const Network& net,
                                       const DefenderStrategy& s1,
                                       const AttackerStrategy& s2,
                                       const GameParams& params);

// Expectations of the primitive quantities under a profile.
struct ProfileExpectations {
  Rational initial_flow;    // E[F(x)]
  Rational transport_cost;  // E[C1(x)]
  Rational attack_cost;     // E[C2(mu)]
  Rational effective_flow;  // E[F(x^mu)]
  Rational lost_flow;       // E[F(x - x^mu)]
};

ProfileExpectations ComputeExpectations(const Network& net,
                                        const DefenderStrategy& s1,
                                        const AttackerStrategy& s2);

// Decomposes a feasible edge flow and discards its cycles. The result never
// pays more transport cost and never loses more flow under any attack.
PathFlow StripLoops(const Network& net, const EdgeFlow& x);

}  // namespace netgame

#endif  // NETGAME_GAME_H_
