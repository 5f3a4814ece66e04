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

#ifndef NETGAME_ERROR_H_
#define NETGAME_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace netgame {

enum class ErrorCode {
  kParse,
  kDuplicateNode,
  kDuplicateEdge,
  kSelfLoop,
  kUnknownEndpoint,
  kNegativeCapacity,
  kNegativeCost,
  kSourceEqualsSink,
  kEmptyTerminalSet,
  kInvalidFlow,
  kInvalidStrategy,
  kLoopyFlow,
  kThetaZero,
  kAlphaInfinite,
  kWrongRegion,
  kNotAlphaRouted,
  kBoundary,
  kPathBudgetExceeded,
  kEdgeBudgetExceeded,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this type. The message names the
// offending element (edge, node, field) whenever there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace netgame

#endif  // NETGAME_ERROR_H_
