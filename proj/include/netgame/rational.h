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

#ifndef NETGAME_RATIONAL_H_
#define NETGAME_RATIONAL_H_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace netgame {

// Every capacity, cost, probability and payoff is an exact rational.
using Rational = mpq_class;

// Parses "7", "-3", "1/2" or "7/2". Decimal and exponent notation is
// rejected: equilibrium decisions are equality tests and a decimal literal
// like "0.1" has no exact binary meaning to the caller.
Rational ParseRational(std::string_view text);

// Canonical form: "p" for integers, "p/q" in lowest terms otherwise.
std::string FormatRational(const Rational& value);

double ToDouble(const Rational& value);

// Shortest-path style quantities may be infinite; nullopt encodes +infinity.
using ExtendedRational = std::optional<Rational>;

std::string FormatExtended(const ExtendedRational& value);

}  // namespace netgame

#endif  // NETGAME_RATIONAL_H_
