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

#ifndef NETGAME_NETWORK_H_
#define NETGAME_NETWORK_H_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "netgame/rational.h"

namespace netgame {

using NodeId = std::string;
using NodeIndex = int;
using EdgeId = int;

// Unvalidated input, as read from a file or assembled by a caller.
struct RawEdge {
  NodeId from;
  NodeId to;
  Rational capacity;
  Rational cost;
};

struct RawNetwork {
  std::vector<NodeId> nodes;
  std::vector<RawEdge> edges;
  NodeId source;
  NodeId sink;
};

struct EdgeSpec {
  EdgeId id = 0;
  NodeIndex from = 0;
  NodeIndex to = 0;
  Rational capacity;  // flow units
  Rational cost;      // money per unit of flow
};

// A validated capacitated directed graph with a distinguished source and
// sink. Immutable once built. Edge ids are dense and follow input order;
// node indices follow the order of `nodes` in the raw input.
class Network {
 public:
  // Throws Error with kDuplicateNode, kDuplicateEdge, kSelfLoop,
  // kUnknownEndpoint, kNegativeCapacity, kNegativeCost or kSourceEqualsSink.
  static Network Validate(const RawNetwork& raw);

  int num_nodes() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  NodeIndex source() const { return source_; }
  NodeIndex sink() const { return sink_; }

  const std::vector<EdgeSpec>& edges() const { return edges_; }
  const EdgeSpec& edge(EdgeId id) const { return edges_[id]; }
  const NodeId& name(NodeIndex v) const { return names_[v]; }

  // Edge ids leaving / entering a node, ascending.
  const std::vector<EdgeId>& out_edges(NodeIndex v) const { return out_[v]; }
  const std::vector<EdgeId>& in_edges(NodeIndex v) const { return in_[v]; }

  std::optional<NodeIndex> FindNode(const NodeId& name) const;
  std::optional<EdgeId> FindEdge(NodeIndex from, NodeIndex to) const;

  Rational TotalCapacity() const;
  // "(from,to)" using node names.
  std::string EdgeLabel(EdgeId id) const;

  RawNetwork ToRaw() const;

  // Same network with every capacity multiplied by `factor`.
  Network WithScaledCapacities(const Rational& factor) const;

 private:
  Network() = default;

  std::vector<NodeId> names_;
  std::unordered_map<NodeId, NodeIndex> index_;
  std::vector<EdgeSpec> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  NodeIndex source_ = 0;
  NodeIndex sink_ = 0;
};

// An s-t cut {S, T}.
struct Cut {
  std::vector<NodeIndex> s_side;   // ascending
  std::vector<EdgeId> cut_set;     // edges S -> T, ascending
  Rational capacity;
};

// Builds the cut induced by a node membership vector. Requires
// in_s[source] && !in_s[sink].
Cut MakeCut(const Network& net, const std::vector<bool>& in_s);

struct MultiTerminalNetwork {
  std::vector<NodeId> nodes;
  std::vector<RawEdge> edges;
  std::vector<NodeId> sources;
  std::vector<NodeId> sinks;
};

// Reduces several sources (sinks) to one by adding a super-source
// (super-sink) joined to each terminal by a zero-cost edge whose capacity,
// total capacity + 1, can never bind. A side with a single terminal is kept
// as is. Throws kEmptyTerminalSet, or kSourceEqualsSink when the sets meet.
Network NormalizeMultiTerminal(const MultiTerminalNetwork& multi);

}  // namespace netgame

#endif  // NETGAME_NETWORK_H_
