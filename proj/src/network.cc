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

#include "netgame/network.h"

#include <algorithm>
#include <set>
#include <utility>

#include "netgame/error.h"

namespace netgame {

Network Network::Validate(const RawNetwork& raw) {
  Network net;
  for (const NodeId& name : raw.nodes) {
    if (!net.index_.emplace(name, net.num_nodes()).second) {
      throw Error(ErrorCode::kDuplicateNode, "duplicate node \"" + name + "\"");
    }
    net.names_.push_back(name);
  }
  auto lookup = [&](const NodeId& name, const std::string& what) {
    auto it = net.index_.find(name);
    if (it == net.index_.end()) {
      throw Error(ErrorCode::kUnknownEndpoint,
                  what + " refers to unknown node \"" + name + "\"");
    }
    return it->second;
  };
  net.source_ = lookup(raw.source, "source");
  net.sink_ = lookup(raw.sink, "sink");
  if (net.source_ == net.sink_) {
    throw Error(ErrorCode::kSourceEqualsSink,
                "source and sink are both \"" + raw.source + "\"");
  }

  net.out_.resize(net.names_.size());
  net.in_.resize(net.names_.size());
  std::set<std::pair<NodeIndex, NodeIndex>> seen;
  for (std::size_t k = 0; k < raw.edges.size(); ++k) {
    const RawEdge& e = raw.edges[k];
    const std::string label =
        "edge " + std::to_string(k) + " (" + e.from + "," + e.to + ")";
    EdgeSpec spec;
    spec.id = static_cast<EdgeId>(k);
    spec.from = lookup(e.from, label);
    spec.to = lookup(e.to, label);
    if (spec.from == spec.to) {
      throw Error(ErrorCode::kSelfLoop, label + " is a self-loop");
    }
    if (!seen.emplace(spec.from, spec.to).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  label + " duplicates an earlier edge; model parallel edges "
                          "through an intermediate node");
    }
    if (e.capacity < 0) {
      throw Error(ErrorCode::kNegativeCapacity,
                  label + " has negative capacity " +
                      FormatRational(e.capacity));
    }
    if (e.cost < 0) {
      throw Error(ErrorCode::kNegativeCost,
                  label + " has negative cost " + FormatRational(e.cost));
    }
    spec.capacity = e.capacity;
    spec.capacity.canonicalize();
    spec.cost = e.cost;
    spec.cost.canonicalize();
    net.out_[spec.from].push_back(spec.id);
    net.in_[spec.to].push_back(spec.id);
    net.edges_.push_back(std::move(spec));
  }
  return net;
}

std::optional<NodeIndex> Network::FindNode(const NodeId& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Network::FindEdge(NodeIndex from, NodeIndex to) const {
  if (from < 0 || from >= num_nodes()) return std::nullopt;
  for (EdgeId id : out_[from]) {
    if (edges_[id].to == to) return id;
  }
  return std::nullopt;
}

Rational Network::TotalCapacity() const {
  Rational total = 0;
  for (const EdgeSpec& e : edges_) total += e.capacity;
  return total;
}

std::string Network::EdgeLabel(EdgeId id) const {
  const EdgeSpec& e = edges_[id];
  return "(" + names_[e.from] + "," + names_[e.to] + ")";
}

RawNetwork Network::ToRaw() const {
  RawNetwork raw;
  raw.nodes = names_;
  raw.source = names_[source_];
  raw.sink = names_[sink_];
  for (const EdgeSpec& e : edges_) {
    raw.edges.push_back({names_[e.from], names_[e.to], e.capacity, e.cost});
  }
  return raw;
}

Network Network::WithScaledCapacities(const Rational& factor) const {
  Network scaled = *this;
  for (EdgeSpec& e : scaled.edges_) e.capacity *= factor;
  return scaled;
}

Cut MakeCut(const Network& net, const std::vector<bool>& in_s) {
  Cut cut;
  cut.capacity = 0;
  for (NodeIndex v = 0; v < net.num_nodes(); ++v) {
    if (in_s[v]) cut.s_side.push_back(v);
  }
  for (const EdgeSpec& e : net.edges()) {
    if (in_s[e.from] && !in_s[e.to]) {
      cut.cut_set.push_back(e.id);
      cut.capacity += e.capacity;
    }
  }
  return cut;
}

namespace {

NodeId FreshName(const std::set<NodeId>& taken, const std::string& base) {
  NodeId name = base;
  for (int k = 1; taken.count(name) > 0; ++k) {
    name = base + "_" + std::to_string(k);
  }
  return name;
}

}  // namespace

Network NormalizeMultiTerminal(const MultiTerminalNetwork& multi) {
  if (multi.sources.empty() || multi.sinks.empty()) {
    throw Error(ErrorCode::kEmptyTerminalSet,
                multi.sources.empty() ? "source set is empty"
                                      : "sink set is empty");
  }
  for (const NodeId& s : multi.sources) {
    if (std::find(multi.sinks.begin(), multi.sinks.end(), s) !=
        multi.sinks.end()) {
      throw Error(ErrorCode::kSourceEqualsSink,
                  "node \"" + s + "\" is both a source and a sink");
    }
  }

  RawNetwork raw;
  raw.nodes = multi.nodes;
  raw.edges = multi.edges;
  std::set<NodeId> taken(multi.nodes.begin(), multi.nodes.end());

  Rational bound = 1;
  for (const RawEdge& e : multi.edges) bound += e.capacity;

  if (multi.sources.size() == 1) {
    raw.source = multi.sources.front();
  } else {
    raw.source = FreshName(taken, "super_source");
    taken.insert(raw.source);
    raw.nodes.push_back(raw.source);
    for (const NodeId& s : multi.sources) {
      raw.edges.push_back({raw.source, s, bound, Rational(0)});
    }
  }
  if (multi.sinks.size() == 1) {
    raw.sink = multi.sinks.front();
  } else {
    raw.sink = FreshName(taken, "super_sink");
    raw.nodes.push_back(raw.sink);
    for (const NodeId& t : multi.sinks) {
      raw.edges.push_back({t, raw.sink, bound, Rational(0)});
    }
  }
  return Network::Validate(raw);
}

}  // namespace netgame
