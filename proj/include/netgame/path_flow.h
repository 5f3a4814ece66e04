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

#ifndef NETGAME_PATH_FLOW_H_
#define NETGAME_PATH_FLOW_H_

#include <compare>
#include <span>
#include <vector>

#include "netgame/network.h"
#include "netgame/rational.h"

namespace netgame {

// x_ij for every edge, indexed by edge id.
struct EdgeFlow {
  std::vector<Rational> amounts;

  static EdgeFlow Zero(const Network& net) {
    return EdgeFlow{std::vector<Rational>(net.num_edges(), Rational(0))};
  }
  bool operator==(const EdgeFlow&) const = default;
};

// Flow entering the sink: sum of x_it.
Rational FlowValue(const Network& net, const EdgeFlow& flow);
Rational EdgeTransportCost(const Network& net, const EdgeFlow& flow);

// Throws kInvalidFlow naming the first violated capacity or conservation
// constraint.
void CheckFeasible(const Network& net, const EdgeFlow& flow);

// An amount routed along a simple s-t path, stored as its edge sequence.
struct FlowPath {
  std::vector<EdgeId> edges;
  Rational amount;

  std::strong_ordering operator<=>(const FlowPath& other) const {
    if (auto c = edges <=> other.edges; c != 0) return c;
    return cmp(amount, other.amount) <=> 0;
  }
  bool operator==(const FlowPath&) const = default;
};

// A defender action: nonnegative amounts on simple s-t paths. Two
// PathFlows with identical edge flows but different decompositions are
// different actions, because attacks act on paths.
struct PathFlow {
  std::vector<FlowPath> paths;

  std::strong_ordering operator<=>(const PathFlow&) const = default;
  bool operator==(const PathFlow&) const = default;
};

struct FlowCycle {
  std::vector<EdgeId> edges;
  Rational amount;
};

std::vector<NodeIndex> PathNodes(const Network& net,
                                 std::span<const EdgeId> edges);
Rational PathCost(const Network& net, std::span<const EdgeId> edges);
Rational PathBottleneck(const Network& net, std::span<const EdgeId> edges);

// F(x): every simple s-t path delivers its amount to the sink once.
Rational Value(const PathFlow& flow);

// Edge flows induced by the path amounts.
EdgeFlow ToEdgeFlow(const Network& net, const PathFlow& flow);

// Sorts paths, merges repeated paths and drops zero amounts.
PathFlow Canonicalize(PathFlow flow);

// Builds a path from a node sequence, or throws kInvalidStrategy when a
// consecutive pair is not an edge. Does not check simplicity.
std::vector<EdgeId> EdgesAlong(const Network& net,
                               std::span<const NodeIndex> nodes);

// Checks that every path runs from source to sink over existing edges,
// visits no node twice (kLoopyFlow otherwise), carries a positive amount,
// and that the induced edge flow respects capacities.
void ValidatePathFlow(const Network& net, const PathFlow& flow);

}  // namespace netgame

#endif  // NETGAME_PATH_FLOW_H_
