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

#include "netgame/rational.h"

#include <cctype>

#include "netgame/error.h"

namespace netgame {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kNegativeCapacity: return "NegativeCapacity";
    case ErrorCode::kNegativeCost: return "NegativeCost";
    case ErrorCode::kSourceEqualsSink: return "SourceEqualsSink";
    case ErrorCode::kEmptyTerminalSet: return "EmptyTerminalSet";
    case ErrorCode::kInvalidFlow: return "InvalidFlow";
    case ErrorCode::kInvalidStrategy: return "InvalidStrategy";
    case ErrorCode::kLoopyFlow: return "LoopyFlowInSupport";
    case ErrorCode::kThetaZero: return "ThetaZero";
    case ErrorCode::kAlphaInfinite: return "AlphaInfinite";
    case ErrorCode::kWrongRegion: return "WrongRegion";
    case ErrorCode::kNotAlphaRouted: return "Assumption1Violated";
    case ErrorCode::kBoundary: return "BoundaryParams";
    case ErrorCode::kPathBudgetExceeded: return "PathBudgetExceeded";
    case ErrorCode::kEdgeBudgetExceeded: return "EdgeBudgetExceeded";
  }
  return "Unknown";
}

namespace {

bool IsIntegerLiteral(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string quoted = "\"" + std::string(text) + "\"";
  if (text.find_first_of(".eE") != std::string_view::npos) {
    throw Error(ErrorCode::kParse,
                "floating-point literal " + quoted +
                    " rejected: numbers must be exact integers or p/q");
  }
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorCode::kParse, "malformed rational literal " + quoted);
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kParse, "zero denominator in " + quoted);
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string FormatRational(const Rational& value) { return value.get_str(); }

double ToDouble(const Rational& value) { return value.get_d(); }

std::string FormatExtended(const ExtendedRational& value) {
  return value ? FormatRational(*value) : std::string("infinite");
}

}  // namespace netgame
