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

#ifndef NETGAME_IO_H_
#define NETGAME_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "netgame/game.h"
#include "netgame/network.h"

namespace netgame {

using Json = nlohmann::ordered_json;

// Reads a whole file; throws kParse if it cannot be opened.
std::string ReadFile(const std::string& path);

// Parses JSON text, converting syntax errors to kParse with line/column.
Json ParseJson(std::string_view text, const std::string& what);

// {"nodes":[...], "source":"s", "sink":"t",
//  "edges":[{"from":"s","to":"1","capacity":"2","cost":"1"}, ...]}
// Numbers are rational strings. Parse errors name the offending field.
RawNetwork RawNetworkFromJson(const Json& json);
Network NetworkFromJson(const Json& json);
Json NetworkToJson(const Network& net);

Json RationalToJson(const Rational& value);
Json PathFlowToJson(const Network& net, const PathFlow& flow);
Json AttackToJson(const Network& net, const Attack& mu);
Json DefenderStrategyToJson(const Network& net, const DefenderStrategy& s1);
Json AttackerStrategyToJson(const Network& net, const AttackerStrategy& s2);

PathFlow PathFlowFromJson(const Network& net, const Json& json,
                          const std::string& field);
Attack AttackFromJson(const Network& net, const Json& json,
                      const std::string& field);

// {"p1_strategy":[{"prob":"1/2","flow":{"paths":[...]}}, ...],
//  "p2_strategy":[{"prob":"1/2","attack":[["1","3"], ...]}, ...]}
// Either key may be absent. Present strategies are validated.
struct StrategyProfile {
  std::optional<DefenderStrategy> s1;
  std::optional<AttackerStrategy> s2;
};

StrategyProfile ProfileFromJson(const Network& net, const Json& json);
Json ProfileToJson(const Network& net, const StrategyProfile& profile);

}  // namespace netgame

#endif  // NETGAME_IO_H_
