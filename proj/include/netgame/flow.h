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

#ifndef NETGAME_FLOW_H_
#define NETGAME_FLOW_H_

#include <optional>
#include <vector>

#include "netgame/network.h"
#include "netgame/path_flow.h"
#include "netgame/rational.h"

namespace netgame {

struct MaxFlowResult {
  Rational value;
  EdgeFlow flow;
};

// Shortest-augmenting-path max-flow (breadth-first residual search, arcs
// scanned by ascending edge id). Exact on rationals.
MaxFlowResult MaxFlow(const Network& net);

// Nodes reachable from the source through arcs of positive residual
// capacity with respect to `flow`.
std::vector<bool> ResidualReachable(const Network& net, const EdgeFlow& flow);

// The source-side minimum cut: S is the residual-reachable set of a maximum
// flow. This set does not depend on which maximum flow is used.
Cut MinCut(const Network& net);

enum class TieBreak {
  kLowestEdgeId,
  kHighestEdgeId,
};

struct MinCostFlowResult {
  EdgeFlow flow;
  Rational value;
  Rational cost;
};

// Successive shortest paths with node potentials. Costs are nonnegative, so
// the reduced costs stay nonnegative and Dijkstra applies at every round.
// `tie_break` only changes which of several equal-cost augmenting paths is
// taken; value and cost are the same either way.
MinCostFlowResult MinCostMaxFlow(const Network& net,
                                 TieBreak tie_break = TieBreak::kLowestEdgeId);

struct Decomposition {
  PathFlow paths;
  std::vector<FlowCycle> cycles;
};

// Splits a feasible flow into simple s-t paths and cycles whose sum
// reproduces every x_ij exactly. Paths are peeled greedily by following the
// lowest-id out-edge that still carries flow, starting at the source; a cycle
// closed during such a walk is peeled off on the spot. At most |E| pieces.
// Throws kInvalidFlow if the flow is not feasible.
Decomposition Decompose(const Network& net, const EdgeFlow& flow);

// Cheapest s-t path cost under b over edges with positive capacity;
// nullopt when the sink is unreachable.
ExtendedRational ComputeAlpha(const Network& net);

struct AlphaRoutingCheck {
  bool holds = false;
  // Decomposition of the minimum-cost maximum flow. When `holds`, every path
  // in it costs exactly alpha.
  PathFlow witness;
  // When !holds: a path of the decomposition that costs more than alpha.
  std::optional<FlowPath> violating_path;
};

// Decides whether some minimum-cost maximum flow routes only along paths of
// cost alpha. Every s-t path costs at least alpha, so this holds exactly when
// the optimal cost equals alpha * theta. Throws kThetaZero when no flow can
// reach the sink.
AlphaRoutingCheck CheckAlphaRouting(const Network& net);

struct FlowAnalysis {
  Rational theta;
  Cut min_cut;
  PathFlow x_star;
  EdgeFlow x_star_edges;
  Rational min_transport_cost;
  ExtendedRational alpha;
  // nullopt when theta == 0 (property not applicable).
  std::optional<bool> alpha_routed;
  std::optional<FlowPath> violating_path;
};

FlowAnalysis AnalyzeFlows(const Network& net);

}  // namespace netgame

#endif  // NETGAME_FLOW_H_
