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

#include "netgame/io.h"

#include <fstream>
#include <sstream>

#include "netgame/error.h"

namespace netgame {
namespace {

[[noreturn]] void Fail(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::kParse, field + ": " + message);
}

const Json& Member(const Json& object, const std::string& key,
                   const std::string& field) {
  if (!object.is_object()) Fail(field, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) Fail(field, "missing key \"" + key + "\"");
  return *it;
}

std::string String(const Json& json, const std::string& field) {
  if (!json.is_string()) Fail(field, "expected a string");
  return json.get<std::string>();
}

Rational RationalField(const Json& json, const std::string& field) {
  if (!json.is_string()) {
    Fail(field, "numbers must be rational strings such as \"3\" or \"1/2\"");
  }
  try {
    return ParseRational(json.get<std::string>());
  } catch (const Error& e) {
    Fail(field, e.what());
  }
}

const Json& Array(const Json& json, const std::string& field) {
  if (!json.is_array()) Fail(field, "expected an array");
  return json;
}

std::string Index(const std::string& field, std::size_t k) {
  return field + "[" + std::to_string(k) + "]";
}

NodeIndex NodeField(const Network& net, const Json& json,
                    const std::string& field) {
  const std::string name = String(json, field);
  auto v = net.FindNode(name);
  if (!v) {
    throw Error(ErrorCode::kInvalidStrategy,
                field + ": unknown node \"" + name + "\"");
  }
  return *v;
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open \"" + path + "\"");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Json ParseJson(std::string_view text, const std::string& what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, what + ": " + e.what());
  }
}

RawNetwork RawNetworkFromJson(const Json& json) {
  RawNetwork raw;
  const Json& nodes = Array(Member(json, "nodes", "network"), "nodes");
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    raw.nodes.push_back(String(nodes[k], Index("nodes", k)));
  }
  raw.source = String(Member(json, "source", "network"), "source");
  raw.sink = String(Member(json, "sink", "network"), "sink");
  const Json& edges = Array(Member(json, "edges", "network"), "edges");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string field = Index("edges", k);
    RawEdge e;
    e.from = String(Member(edges[k], "from", field), field + ".from");
    e.to = String(Member(edges[k], "to", field), field + ".to");
    e.capacity =
        RationalField(Member(edges[k], "capacity", field), field + ".capacity");
    e.cost = RationalField(Member(edges[k], "cost", field), field + ".cost");
    raw.edges.push_back(std::move(e));
  }
  return raw;
}

Network NetworkFromJson(const Json& json) {
  return Network::Validate(RawNetworkFromJson(json));
}

Json RationalToJson(const Rational& value) { return FormatRational(value); }

Json NetworkToJson(const Network& net) {
  const RawNetwork raw = net.ToRaw();
  Json json;
  json["nodes"] = raw.nodes;
  json["source"] = raw.source;
  json["sink"] = raw.sink;
  json["edges"] = Json::array();
  for (const RawEdge& e : raw.edges) {
    Json edge;
    edge["from"] = e.from;
    edge["to"] = e.to;
    edge["capacity"] = RationalToJson(e.capacity);
    edge["cost"] = RationalToJson(e.cost);
    json["edges"].push_back(std::move(edge));
  }
  return json;
}

Json PathFlowToJson(const Network& net, const PathFlow& flow) {
  Json paths = Json::array();
  for (const FlowPath& p : flow.paths) {
    Json path;
    Json nodes = Json::array();
    for (NodeIndex v : PathNodes(net, p.edges)) nodes.push_back(net.name(v));
    path["nodes"] = std::move(nodes);
    path["amount"] = RationalToJson(p.amount);
    paths.push_back(std::move(path));
  }
  Json json;
  json["paths"] = std::move(paths);
  return json;
}

Json AttackToJson(const Network& net, const Attack& mu) {
  Json edges = Json::array();
  for (EdgeId id : mu.disrupted) {
    const EdgeSpec& e = net.edge(id);
    edges.push_back(Json::array({net.name(e.from), net.name(e.to)}));
  }
  return edges;
}

Json DefenderStrategyToJson(const Network& net, const DefenderStrategy& s1) {
  Json support = Json::array();
  for (const auto& [x, prob] : s1.support) {
    Json entry;
    entry["prob"] = RationalToJson(prob);
    entry["flow"] = PathFlowToJson(net, x);
    support.push_back(std::move(entry));
  }
  return support;
}

Json AttackerStrategyToJson(const Network& net, const AttackerStrategy& s2) {
  Json support = Json::array();
  for (const auto& [mu, prob] : s2.support) {
    Json entry;
    entry["prob"] = RationalToJson(prob);
    entry["attack"] = AttackToJson(net, mu);
    support.push_back(std::move(entry));
  }
  return support;
}

PathFlow PathFlowFromJson(const Network& net, const Json& json,
                          const std::string& field) {
  const Json& paths =
      Array(Member(json, "paths", field), field + ".paths");
  PathFlow flow;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const std::string path_field = Index(field + ".paths", k);
    const Json& nodes = Array(Member(paths[k], "nodes", path_field),
                              path_field + ".nodes");
    std::vector<NodeIndex> sequence;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      sequence.push_back(
          NodeField(net, nodes[j], Index(path_field + ".nodes", j)));
    }
    FlowPath path;
    try {
      path.edges = EdgesAlong(net, sequence);
    } catch (const Error& e) {
      throw Error(e.code(), path_field + ": " + e.what());
    }
    path.amount = RationalField(Member(paths[k], "amount", path_field),
                                path_field + ".amount");
    flow.paths.push_back(std::move(path));
  }
  try {
    ValidatePathFlow(net, flow);
  } catch (const Error& e) {
    throw Error(e.code(), field + ": " + e.what());
  }
  return Canonicalize(std::move(flow));
}

Attack AttackFromJson(const Network& net, const Json& json,
                      const std::string& field) {
  Array(json, field);
  std::vector<EdgeId> edges;
  for (std::size_t k = 0; k < json.size(); ++k) {
    const std::string edge_field = Index(field, k);
    const Json& pair = Array(json[k], edge_field);
    if (pair.size() != 2) Fail(edge_field, "expected [from, to]");
    const NodeIndex from = NodeField(net, pair[0], edge_field + "[0]");
    const NodeIndex to = NodeField(net, pair[1], edge_field + "[1]");
    auto id = net.FindEdge(from, to);
    if (!id) {
      throw Error(ErrorCode::kInvalidStrategy,
                  edge_field + ": no edge (" + net.name(from) + "," +
                      net.name(to) + ")");
    }
    edges.push_back(*id);
  }
  return MakeAttack(net, std::move(edges));
}

StrategyProfile ProfileFromJson(const Network& net, const Json& json) {
  if (!json.is_object()) Fail("profile", "expected an object");
  StrategyProfile profile;
  if (auto it = json.find("p1_strategy"); it != json.end()) {
    const Json& support = Array(*it, "p1_strategy");
    DefenderStrategy s1;
    for (std::size_t k = 0; k < support.size(); ++k) {
      const std::string field = Index("p1_strategy", k);
      Rational prob =
          RationalField(Member(support[k], "prob", field), field + ".prob");
      PathFlow x =
          PathFlowFromJson(net, Member(support[k], "flow", field), field + ".flow");
      s1.support.push_back({std::move(x), std::move(prob)});
    }
    ValidateStrategy(net, s1);
    profile.s1 = std::move(s1);
  }
  if (auto it = json.find("p2_strategy"); it != json.end()) {
    const Json& support = Array(*it, "p2_strategy");
    AttackerStrategy s2;
    for (std::size_t k = 0; k < support.size(); ++k) {
      const std::string field = Index("p2_strategy", k);
      Rational prob =
          RationalField(Member(support[k], "prob", field), field + ".prob");
      Attack mu = AttackFromJson(net, Member(support[k], "attack", field),
                                 field + ".attack");
      s2.support.push_back({std::move(mu), std::move(prob)});
    }
    ValidateStrategy(net, s2);
    profile.s2 = std::move(s2);
  }
  return profile;
}

Json ProfileToJson(const Network& net, const StrategyProfile& profile) {
  Json json = Json::object();
  if (profile.s1) json["p1_strategy"] = DefenderStrategyToJson(net, *profile.s1);
  if (profile.s2) json["p2_strategy"] = AttackerStrategyToJson(net, *profile.s2);
  return json;
}

}  // namespace netgame
