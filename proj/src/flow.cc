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

#include "netgame/flow.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "netgame/error.h"

namespace netgame {
namespace {

// A residual arc: `forward` arcs push along the edge, backward arcs cancel.
struct Arc {
  EdgeId edge;
  bool forward;
};

// Residual arcs leaving each node, sorted by edge id.
std::vector<std::vector<Arc>> ResidualArcs(const Network& net) {
  std::vector<std::vector<Arc>> arcs(net.num_nodes());
  for (NodeIndex v = 0; v < net.num_nodes(); ++v) {
    for (EdgeId id : net.out_edges(v)) arcs[v].push_back({id, true});
    for (EdgeId id : net.in_edges(v)) arcs[v].push_back({id, false});
    std::sort(arcs[v].begin(), arcs[v].end(), [](const Arc& a, const Arc& b) {
      return a.edge != b.edge ? a.edge < b.edge : a.forward > b.forward;
    });
  }
  return arcs;
}

Rational Residual(const Network& net, const EdgeFlow& flow, const Arc& arc) {
  const Rational& x = flow.amounts[arc.edge];
  return arc.forward ? net.edge(arc.edge).capacity - x : x;
}

NodeIndex Head(const Network& net, const Arc& arc) {
  const EdgeSpec& e = net.edge(arc.edge);
  return arc.forward ? e.to : e.from;
}

NodeIndex Tail(const Network& net, const Arc& arc) {
  const EdgeSpec& e = net.edge(arc.edge);
  return arc.forward ? e.from : e.to;
}

void Augment(const Network& net, EdgeFlow& flow, const std::vector<Arc>& path,
             const Rational& delta) {
  for (const Arc& arc : path) {
    if (arc.forward) {
      flow.amounts[arc.edge] += delta;
    } else {
      flow.amounts[arc.edge] -= delta;
    }
  }
  (void)net;
}

// Arc path from source to sink recovered from predecessor arcs.
std::vector<Arc> TracePath(const Network& net,
                           const std::vector<std::optional<Arc>>& pred) {
  std::vector<Arc> path;
  for (NodeIndex v = net.sink(); v != net.source();) {
    path.push_back(*pred[v]);
    v = Tail(net, *pred[v]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Rational Bottleneck(const Network& net, const EdgeFlow& flow,
                    const std::vector<Arc>& path) {
  Rational delta = Residual(net, flow, path.front());
  for (const Arc& arc : path) {
    Rational r = Residual(net, flow, arc);
    if (r < delta) delta = r;
  }
  return delta;
}

}  // namespace

MaxFlowResult MaxFlow(const Network& net) {
  const auto arcs = ResidualArcs(net);
  MaxFlowResult result{Rational(0), EdgeFlow::Zero(net)};
  while (true) {
    std::vector<std::optional<Arc>> pred(net.num_nodes());
    std::vector<bool> seen(net.num_nodes(), false);
    std::deque<NodeIndex> queue{net.source()};
    seen[net.source()] = true;
    while (!queue.empty() && !seen[net.sink()]) {
      NodeIndex v = queue.front();
      queue.pop_front();
      for (const Arc& arc : arcs[v]) {
        NodeIndex w = Head(net, arc);
        if (seen[w] || Residual(net, result.flow, arc) <= 0) continue;
        seen[w] = true;
        pred[w] = arc;
        queue.push_back(w);
      }
    }
    if (!seen[net.sink()]) break;
    const std::vector<Arc> path = TracePath(net, pred);
    const Rational delta = Bottleneck(net, result.flow, path);
    Augment(net, result.flow, path, delta);
    result.value += delta;
  }
  return result;
}

std::vector<bool> ResidualReachable(const Network& net, const EdgeFlow& flow) {
  const auto arcs = ResidualArcs(net);
  std::vector<bool> seen(net.num_nodes(), false);
  std::deque<NodeIndex> queue{net.source()};
  seen[net.source()] = true;
  while (!queue.empty()) {
    NodeIndex v = queue.front();
    queue.pop_front();
    for (const Arc& arc : arcs[v]) {
      NodeIndex w = Head(net, arc);
      if (seen[w] || Residual(net, flow, arc) <= 0) continue;
      seen[w] = true;
      queue.push_back(w);
    }
  }
  return seen;
}

Cut MinCut(const Network& net) {
  const MaxFlowResult max_flow = MaxFlow(net);
  return MakeCut(net, ResidualReachable(net, max_flow.flow));
}

MinCostFlowResult MinCostMaxFlow(const Network& net, TieBreak tie_break) {
  auto arcs = ResidualArcs(net);
  if (tie_break == TieBreak::kHighestEdgeId) {
    for (auto& list : arcs) std::reverse(list.begin(), list.end());
  }
  const int n = net.num_nodes();
  auto arc_cost = [&](const Arc& arc) {
    return arc.forward ? net.edge(arc.edge).cost : -net.edge(arc.edge).cost;
  };

  MinCostFlowResult result{EdgeFlow::Zero(net), Rational(0), Rational(0)};
  std::vector<Rational> potential(n, Rational(0));
  while (true) {
    // Dijkstra on reduced costs c(u,v) + pi(u) - pi(v) >= 0.
    std::vector<ExtendedRational> dist(n);
    std::vector<std::optional<Arc>> pred(n);
    std::vector<bool> done(n, false);
    dist[net.source()] = Rational(0);
    while (true) {
      NodeIndex v = -1;
      for (NodeIndex u = 0; u < n; ++u) {
        if (done[u] || !dist[u]) continue;
        const bool better =
            v < 0 || *dist[u] < *dist[v] ||
            (*dist[u] == *dist[v] && tie_break == TieBreak::kHighestEdgeId);
        if (better) v = u;
      }
      if (v < 0) break;
      done[v] = true;
      for (const Arc& arc : arcs[v]) {
        if (Residual(net, result.flow, arc) <= 0) continue;
        NodeIndex w = Head(net, arc);
        if (done[w]) continue;
        Rational d = *dist[v] + arc_cost(arc) + potential[v] - potential[w];
        if (!dist[w] || d < *dist[w]) {
          dist[w] = d;
          pred[w] = arc;
        }
      }
    }
    if (!dist[net.sink()]) break;

    Rational farthest = 0;
    for (NodeIndex v = 0; v < n; ++v) {
      if (dist[v] && *dist[v] > farthest) farthest = *dist[v];
    }
    // Unreachable nodes shift by the largest distance, which keeps the
    // reduced cost of arcs entering the reachable set nonnegative.
    for (NodeIndex v = 0; v < n; ++v) {
      potential[v] += dist[v] ? *dist[v] : farthest;
    }

    const std::vector<Arc> path = TracePath(net, pred);
    const Rational delta = Bottleneck(net, result.flow, path);
    Augment(net, result.flow, path, delta);
    result.value += delta;
    for (const Arc& arc : path) result.cost += delta * arc_cost(arc);
  }
  return result;
}

namespace {

// Lowest-id out-edge of v with remaining flow, or -1.
EdgeId NextEdge(const Network& net, const std::vector<Rational>& remaining,
                NodeIndex v) {
  for (EdgeId id : net.out_edges(v)) {
    if (remaining[id] > 0) return id;
  }
  return -1;
}

// Subtracts the minimum remaining amount along `edges`; returns it.
Rational Peel(std::vector<Rational>& remaining,
              const std::vector<EdgeId>& edges) {
  Rational amount = remaining[edges.front()];
  for (EdgeId id : edges) {
    if (remaining[id] < amount) amount = remaining[id];
  }
  for (EdgeId id : edges) remaining[id] -= amount;
  return amount;
}

// Walks forward from `start` along positive edges. Cycles closed on the way
// are peeled into `cycles`. Returns the edges of the final walk when it ends
// at the sink (only possible when start is the source), or an empty vector
// once the walk has closed into a cycle and `stop_at_cycle` is set.
std::vector<EdgeId> Walk(const Network& net, std::vector<Rational>& remaining,
                         NodeIndex start, bool stop_at_cycle,
                         std::vector<FlowCycle>& cycles) {
  std::vector<NodeIndex> nodes{start};
  std::vector<EdgeId> edges;
  std::vector<int> position(net.num_nodes(), -1);
  position[start] = 0;
  while (true) {
    const NodeIndex v = nodes.back();
    if (v == net.sink() && start == net.source()) return edges;
    const EdgeId next = NextEdge(net, remaining, v);
    if (next < 0) {
      throw Error(ErrorCode::kInvalidFlow,
                  "flow cannot be decomposed: no outgoing flow at node \"" +
                      net.name(v) + "\"");
    }
    const NodeIndex w = net.edge(next).to;
    if (position[w] < 0) {
      position[w] = static_cast<int>(nodes.size());
      nodes.push_back(w);
      edges.push_back(next);
      continue;
    }
    // Closing a cycle at w.
    const int at = position[w];
    std::vector<EdgeId> cycle(edges.begin() + at, edges.end());
    cycle.push_back(next);
    Rational amount = Peel(remaining, cycle);
    cycles.push_back({std::move(cycle), std::move(amount)});
    if (stop_at_cycle) return {};
    for (std::size_t k = at + 1; k < nodes.size(); ++k) position[nodes[k]] = -1;
    nodes.resize(at + 1);
    edges.resize(at);
  }
}

}  // namespace

Decomposition Decompose(const Network& net, const EdgeFlow& flow) {
  CheckFeasible(net, flow);
  std::vector<Rational> remaining = flow.amounts;
  Decomposition result;
  while (NextEdge(net, remaining, net.source()) >= 0) {
    std::vector<EdgeId> path =
        Walk(net, remaining, net.source(), false, result.cycles);
    Rational amount = Peel(remaining, path);
    result.paths.paths.push_back({std::move(path), std::move(amount)});
  }
  for (EdgeId id = 0; id < net.num_edges(); ++id) {
    while (remaining[id] > 0) {
      Walk(net, remaining, net.edge(id).from, true, result.cycles);
    }
  }
  result.paths = Canonicalize(std::move(result.paths));
  return result;
}

ExtendedRational ComputeAlpha(const Network& net) {
  const int n = net.num_nodes();
  std::vector<ExtendedRational> dist(n);
  std::vector<bool> done(n, false);
  dist[net.source()] = Rational(0);
  while (true) {
    NodeIndex v = -1;
    for (NodeIndex u = 0; u < n; ++u) {
      if (!done[u] && dist[u] && (v < 0 || *dist[u] < *dist[v])) v = u;
    }
    if (v < 0) break;
    done[v] = true;
    for (EdgeId id : net.out_edges(v)) {
      const EdgeSpec& e = net.edge(id);
      if (e.capacity <= 0) continue;
      Rational d = *dist[v] + e.cost;
      if (!dist[e.to] || d < *dist[e.to]) dist[e.to] = d;
    }
  }
  return dist[net.sink()];
}

AlphaRoutingCheck CheckAlphaRouting(const Network& net) {
  const MinCostFlowResult mcf = MinCostMaxFlow(net);
  if (mcf.value == 0) {
    throw Error(ErrorCode::kThetaZero,
                "maximum flow is 0; the routing condition does not apply");
  }
  const Rational alpha = *ComputeAlpha(net);
  AlphaRoutingCheck check;
  check.holds = mcf.cost == alpha * mcf.value;
  check.witness = Decompose(net, mcf.flow).paths;
  for (const FlowPath& p : check.witness.paths) {
    const Rational cost = PathCost(net, p.edges);
    if (cost != alpha && !check.violating_path) check.violating_path = p;
  }
  if (check.holds == check.violating_path.has_value()) {
    throw std::logic_error("cost identity and per-path test disagree");
  }
  return check;
}

FlowAnalysis AnalyzeFlows(const Network& net) {
  FlowAnalysis analysis;
  const MinCostFlowResult mcf = MinCostMaxFlow(net);
  analysis.theta = mcf.value;
  analysis.min_cut = MinCut(net);
  analysis.alpha = ComputeAlpha(net);
  // Zero-cost cycles, if any, are dropped: same value, same cost.
  analysis.x_star = Decompose(net, mcf.flow).paths;
  analysis.x_star_edges = ToEdgeFlow(net, analysis.x_star);
  analysis.min_transport_cost = mcf.cost;
  if (EdgeTransportCost(net, analysis.x_star_edges) != mcf.cost ||
      Value(analysis.x_star) != mcf.value ||
      analysis.min_cut.capacity != mcf.value) {
    throw std::logic_error("flow analysis is internally inconsistent");
  }
  if (analysis.theta > 0) {
    const AlphaRoutingCheck check = CheckAlphaRouting(net);
    analysis.alpha_routed = check.holds;
    analysis.violating_path = check.violating_path;
  }
  return analysis;
}

}  // namespace netgame
