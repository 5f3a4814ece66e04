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

#ifndef NETGAME_EQUILIBRIUM_H_
#define NETGAME_EQUILIBRIUM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netgame/flow.h"
#include "netgame/game.h"
#include "netgame/network.h"
#include "netgame/rational.h"

namespace netgame {

// Parameter regimes with qualitatively different equilibria:
//   I:   0 < p1 < alpha
//   II:  p1 > alpha, 0 < p2 < 1
//   III: p1 > alpha, p2 > 1
// Points with p1 == alpha, or p1 > alpha and p2 == 1, are kBoundary.
enum class RegionTag { kI, kII, kIII, kBoundary };

struct Region {
  RegionTag tag = RegionTag::kBoundary;
  bool p1_equals_alpha = false;
  bool p2_equals_one = false;

  std::string Name() const;
  bool operator==(const Region&) const = default;
};

// Throws kAlphaInfinite when the sink is unreachable; the game is then
// degenerate and (x0, mu0) is its only outcome.
Region ClassifyRegion(const GameParams& params, const ExtendedRational& alpha);

enum class Provenance {
  kNoFlowNoAttack,   // pure (x0, mu0), region I
  kMaxFlowNoAttack,  // pure (x*, mu0), region II
  kMixedMinCut,      // {x0, x*} x {mu0, mu_min}, region III
  kUserSupplied,
};

std::string ProvenanceName(Provenance provenance);

struct EquilibriumProfile {
  DefenderStrategy s1;
  AttackerStrategy s2;
  Provenance provenance = Provenance::kUserSupplied;
};

inline PathFlow NoFlow() { return PathFlow{}; }
inline Attack NoAttack() { return Attack{}; }
Attack CutAttack(const Cut& cut);

// Region-III mixture: x0 w.p. 1 - 1/p2, x* w.p. 1/p2; mu0 w.p. alpha/p1,
// mu_min w.p. 1 - alpha/p1. Uses the analysis' x* and source-side min-cut.
// mu0 is omitted when alpha = 0. Does not check that x* routes along
// alpha-cost paths. Throws kWrongRegion outside region III.
EquilibriumProfile MixedMinCutProfile(const GameParams& params,
                                      const FlowAnalysis& analysis);

// Builds the equilibrium for the region of `params`. Throws kNotAlphaRouted
// in region III when no minimum-cost maximum flow uses only alpha-cost
// paths, kBoundary on region boundaries and kAlphaInfinite when no s-t path
// exists. Every returned profile passes VerifyEquilibrium.
EquilibriumProfile ConstructEquilibrium(const GameParams& params,
                                        const FlowAnalysis& analysis);

// For p1 == alpha and p2 < 1 both (x0, mu0) and (x*, mu0) are equilibria;
// returns them in that order. Throws kBoundary for other parameters.
std::vector<EquilibriumProfile> BoundaryEquilibria(
    const GameParams& params, const FlowAnalysis& analysis);

// Aggregate quantities of an equilibrium.
struct EquilibriumAggregates {
  Rational defender_payoff;
  Rational attacker_payoff;
  Rational initial_flow;
  Rational transport_cost;
  Rational attack_cost;
  Rational effective_flow;
  Rational lost_flow;
  std::optional<Rational> yield;  // effective / initial; nullopt if no flow

  bool operator==(const EquilibriumAggregates&) const = default;
};

// Closed forms valid at every region-III equilibrium of an alpha-routed
// network:
//   U1 = U2 = 0,  E[F(x)] = theta/p2,  E[C1] = alpha theta/p2,
//   E[C2] = (1 - alpha/p1) theta,  E[F(x^mu)] = alpha theta/(p1 p2),
//   E[lost] = (1 - alpha/p1) theta/p2,  yield = alpha/p1.
// Throws kWrongRegion unless (params, alpha) lie in region III.
EquilibriumAggregates ClosedFormAggregates(const GameParams& params,
                                           const ExtendedRational& alpha,
                                           const Rational& theta);

// The same quantities measured directly on a profile.
EquilibriumAggregates MeasuredAggregates(const Network& net,
                                         const DefenderStrategy& s1,
                                         const AttackerStrategy& s2,
                                         const GameParams& params);

struct SearchBudget {
  std::size_t max_paths = 5000;
  std::size_t max_attack_edges = 20;
  // Restrict attacks to edges that carry expected flow. Disrupting any other
  // edge costs its capacity and loses nothing, so optimal attacks never do.
  bool prune_attacks = true;
};

// All simple s-t paths over positive-capacity edges, in depth-first order
// with out-edges scanned by ascending id. Throws kPathBudgetExceeded once
// more than `max_paths` are found.
std::vector<std::vector<EdgeId>> EnumerateSimplePaths(const Network& net,
                                                      std::size_t max_paths);

struct DefenderResponse {
  Rational value;
  PathFlow argmax;
};

// Exact best response to a mixed attack. U1 is linear in path amounts with
// weight p1 * Pr[path survives] - cost(path) per unit, so the best response
// is the packing LP  max sum w x  s.t.  sum_{paths through e} x <= c_e,
// x >= 0, over simple paths (loops only add cost). Paths with w <= 0 are
// left out, so the zero flow is returned when nothing pays.
DefenderResponse BestResponseDefender(const Network& net,
                                      const AttackerStrategy& s2,
                                      const GameParams& params,
                                      const SearchBudget& budget = {});

struct AttackerResponse {
  Rational value;
  Attack argmax;
  std::uint64_t attacks_evaluated = 0;
};

// Exact best response to a mixed flow by enumerating attacks, over the edges
// carrying expected flow unless pruning is disabled. Ties go to the
// lexicographically smallest attack. Throws kEdgeBudgetExceeded when more
// than `max_attack_edges` edges would have to be enumerated.
AttackerResponse BestResponseAttacker(const Network& net,
                                      const DefenderStrategy& s1,
                                      const GameParams& params,
                                      const SearchBudget& budget = {});

enum class CheckStatus { kPass, kFail, kNotApplicable };

std::string CheckStatusName(CheckStatus status);

struct PropertyCheck {
  std::string name;
  CheckStatus status = CheckStatus::kNotApplicable;
  std::string detail;
};

struct VerificationReport {
  bool is_ne = false;
  Rational defender_gap;
  Rational attacker_gap;
  ExpectedPayoffs payoffs;
  DefenderResponse defender_response;
  AttackerResponse attacker_response;
  std::optional<Region> region;
  // Structural properties of region-III equilibria on alpha-routed networks;
  // empty unless is_ne holds there.
  std::vector<PropertyCheck> checks;

  bool AllChecksPass() const;
};

// Exact verification through both best-response oracles: is_ne iff both
// gaps are zero. Throws kLoopyFlow / kInvalidStrategy for malformed
// strategies and the budget errors of the oracles.
VerificationReport VerifyEquilibrium(const Network& net,
                                     const FlowAnalysis& analysis,
                                     const DefenderStrategy& s1,
                                     const AttackerStrategy& s2,
                                     const GameParams& params,
                                     const SearchBudget& budget = {});

// min x_e over all minimum-cost maximum flows: solves the edge-flow LP with
// the flow value fixed at theta and the cost at its optimum.
Rational MinimumOverOptimalFlows(const Network& net,
                                 const FlowAnalysis& analysis, EdgeId edge);

// True iff every minimum-cost maximum flow saturates `edge`.
bool SaturatedByEveryOptimalFlow(const Network& net,
                                 const FlowAnalysis& analysis, EdgeId edge);

// Every minimum cut, by enumerating partitions when the network has at most
// `max_nodes` nodes; otherwise the source-side and sink-side residual cuts.
std::vector<Cut> MinimumCuts(const Network& net, const FlowAnalysis& analysis,
                             int max_nodes = 16);

struct DefenderMaximin {
  Rational value;
  PathFlow argmax;
};

struct AttackerMaximin {
  Rational value;
  Attack argmax;
};

// max over pure flows of min over attacks of u1. The inner minimum of any
// flow is -C1(x) (disrupt everything it uses), so the value is 0 at x0. The
// enumeration over x0, x* and every single-path flow confirms it rather than
// assuming it.
DefenderMaximin MaximinDefender(const Network& net, const GameParams& params,
                                const FlowAnalysis& analysis,
                                const SearchBudget& budget = {});

// max over attacks of min over pure flows of u2; the inner minimum is
// -C2(mu) at x0, so the value is 0 at mu0. Enumerates every attack.
AttackerMaximin MaximinAttacker(const Network& net, const GameParams& params,
                                const FlowAnalysis& analysis,
                                const SearchBudget& budget = {});

struct MinimaxCertificate {
  // Attacker strategy against which the defender's best response is worth
  // defender_value: an upper bound on min max U1.
  Rational defender_value;
  AttackerStrategy defender_certificate;
  // Defender strategy against which the attacker's best response is worth
  // attacker_value: an upper bound on min max U2.
  Rational attacker_value;
  DefenderStrategy attacker_certificate;
};

// Region III (alpha-routed): the mixed min-cut profile certifies both values
// are 0. Region I: mu0 and x0 certify 0. Throws kWrongRegion elsewhere and
// kNotAlphaRouted in region III without the routing property.
MinimaxCertificate ComputeMinimaxCertificate(const Network& net,
                                             const GameParams& params,
                                             const FlowAnalysis& analysis,
                                             const SearchBudget& budget = {});

}  // namespace netgame

#endif  // NETGAME_EQUILIBRIUM_H_
