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

#ifndef NETGAME_LP_H_
#define NETGAME_LP_H_

#include <vector>

#include "netgame/rational.h"

namespace netgame {

enum class Relation {
  kLessEqual,
  kEqual,
  kGreaterEqual,
};

struct LinearConstraint {
  std::vector<Rational> coefficients;  // one per variable
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// Optimize objective . x subject to the constraints and x >= 0.
struct LinearProgram {
  bool maximize = true;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> values;
};

// Dense two-phase primal simplex in exact arithmetic with Bland's rule, so
// it terminates on degenerate problems. Meant for desk-sized programs.
LpSolution SolveLinearProgram(const LinearProgram& lp);

}  // namespace netgame

#endif  // NETGAME_LP_H_
