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

#include "netgame/path_flow.h"

#include <algorithm>
#include <string>

#include "netgame/error.h"

namespace netgame {

Rational FlowValue(const Network& net, const EdgeFlow& flow) {
  Rational value = 0;
  for (EdgeId id : net.in_edges(net.sink())) value += flow.amounts[id];
  return value;
}

Rational EdgeTransportCost(const Network& net, const EdgeFlow& flow) {
  Rational cost = 0;
  for (const EdgeSpec& e : net.edges()) cost += e.cost * flow.amounts[e.id];
  return cost;
}

void CheckFeasible(const Network& net, const EdgeFlow& flow) {
  if (static_cast<int>(flow.amounts.size()) != net.num_edges()) {
    throw Error(ErrorCode::kInvalidFlow, "flow has " +
                                             std::to_string(flow.amounts.size()) +
                                             " entries for " +
                                             std::to_string(net.num_edges()) +
                                             " edges");
  }
  for (const EdgeSpec& e : net.edges()) {
    const Rational& x = flow.amounts[e.id];
    if (x < 0 || x > e.capacity) {
      throw Error(ErrorCode::kInvalidFlow,
                  "flow " + FormatRational(x) + " on " + net.EdgeLabel(e.id) +
                      " outside [0, " + FormatRational(e.capacity) + "]");
    }
  }
  for (NodeIndex v = 0; v < net.num_nodes(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    Rational balance = 0;
    for (EdgeId id : net.in_edges(v)) balance += flow.amounts[id];
    for (EdgeId id : net.out_edges(v)) balance -= flow.amounts[id];
    if (balance != 0) {
      throw Error(ErrorCode::kInvalidFlow,
                  "conservation violated at node \"" + net.name(v) + "\"");
    }
  }
}

std::vector<NodeIndex> PathNodes(const Network& net,
                                 std::span<const EdgeId> edges) {
  std::vector<NodeIndex> nodes;
  if (edges.empty()) return nodes;
  nodes.push_back(net.edge(edges.front()).from);
  for (EdgeId id : edges) nodes.push_back(net.edge(id).to);
  return nodes;
}

Rational PathCost(const Network& net, std::span<const EdgeId> edges) {
  Rational cost = 0;
  for (EdgeId id : edges) cost += net.edge(id).cost;
  return cost;
}

Rational PathBottleneck(const Network& net, std::span<const EdgeId> edges) {
  Rational bottleneck = net.edge(edges.front()).capacity;
  for (EdgeId id : edges) {
    if (net.edge(id).capacity < bottleneck) bottleneck = net.edge(id).capacity;
  }
  return bottleneck;
}

Rational Value(const PathFlow& flow) {
  Rational value = 0;
  for (const FlowPath& p : flow.paths) value += p.amount;
  return value;
}

EdgeFlow ToEdgeFlow(const Network& net, const PathFlow& flow) {
  EdgeFlow edge_flow = EdgeFlow::Zero(net);
  for (const FlowPath& p : flow.paths) {
    for (EdgeId id : p.edges) edge_flow.amounts[id] += p.amount;
  }
  return edge_flow;
}

PathFlow Canonicalize(PathFlow flow) {
  std::sort(flow.paths.begin(), flow.paths.end());
  PathFlow merged;
  for (FlowPath& p : flow.paths) {
    if (p.amount == 0) continue;
    if (!merged.paths.empty() && merged.paths.back().edges == p.edges) {
      merged.paths.back().amount += p.amount;
    } else {
      merged.paths.push_back(std::move(p));
    }
  }
  return merged;
}

std::vector<EdgeId> EdgesAlong(const Network& net,
                               std::span<const NodeIndex> nodes) {
  std::vector<EdgeId> edges;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    auto id = net.FindEdge(nodes[k], nodes[k + 1]);
    if (!id) {
      throw Error(ErrorCode::kInvalidStrategy,
                  "no edge (" + net.name(nodes[k]) + "," +
                      net.name(nodes[k + 1]) + ")");
    }
    edges.push_back(*id);
  }
  return edges;
}

void ValidatePathFlow(const Network& net, const PathFlow& flow) {
  for (const FlowPath& p : flow.paths) {
    if (p.edges.empty()) {
      throw Error(ErrorCode::kInvalidStrategy, "empty path in flow");
    }
    if (p.amount <= 0) {
      throw Error(ErrorCode::kInvalidStrategy,
                  "path amount " + FormatRational(p.amount) +
                      " must be positive");
    }
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
      if (p.edges[k] < 0 || p.edges[k] >= net.num_edges()) {
        throw Error(ErrorCode::kInvalidStrategy, "unknown edge id");
      }
      if (k > 0 && net.edge(p.edges[k - 1]).to != net.edge(p.edges[k]).from) {
        throw Error(ErrorCode::kInvalidStrategy, "path edges are not contiguous");
      }
    }
    const std::vector<NodeIndex> nodes = PathNodes(net, p.edges);
    if (nodes.front() != net.source() || nodes.back() != net.sink()) {
      throw Error(ErrorCode::kInvalidStrategy,
                  "path must run from \"" + net.name(net.source()) +
                      "\" to \"" + net.name(net.sink()) + "\"");
    }
    std::vector<bool> visited(net.num_nodes(), false);
    for (NodeIndex v : nodes) {
      if (visited[v]) {
        throw Error(ErrorCode::kLoopyFlow,
                    "path revisits node \"" + net.name(v) +
                        "\": flows containing loops are strictly dominated "
                        "for the defender and are not accepted as strategies");
      }
      visited[v] = true;
    }
  }
  const EdgeFlow edge_flow = ToEdgeFlow(net, flow);
  for (const EdgeSpec& e : net.edges()) {
    if (edge_flow.amounts[e.id] > e.capacity) {
      throw Error(ErrorCode::kInvalidStrategy,
                  "paths put " + FormatRational(edge_flow.amounts[e.id]) +
                      " on " + net.EdgeLabel(e.id) + " of capacity " +
                      FormatRational(e.capacity));
    }
  }
}

}  // namespace netgame
