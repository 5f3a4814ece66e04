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

#include "netgame/lp.h"

#include <optional>
#include <stdexcept>

namespace netgame {
namespace {

// Minimization tableau: rows hold B^-1 [A | b]; basis[i] is the column
// basic in row i.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<int> basis,
          int num_columns)
      : rows_(std::move(rows)),
        basis_(std::move(basis)),
        num_columns_(num_columns) {}

  // Runs simplex iterations for `cost` over columns [0, usable). Returns
  // false if the objective is unbounded below.
  bool Minimize(const std::vector<Rational>& cost, int usable) {
    while (true) {
      std::optional<int> entering;
      for (int j = 0; j < usable && !entering; ++j) {
        if (IsBasic(j)) continue;
        if (ReducedCost(cost, j) < 0) entering = j;
      }
      if (!entering) return true;
      std::optional<int> leaving;
      Rational best_ratio;
      for (int i = 0; i < num_rows(); ++i) {
        const Rational& a = rows_[i][*entering];
        if (a <= 0) continue;
        Rational ratio = rows_[i][num_columns_] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      Pivot(*leaving, *entering);
    }
  }

  Rational Objective(const std::vector<Rational>& cost) const {
    Rational z = 0;
    for (int i = 0; i < num_rows(); ++i) {
      z += cost[basis_[i]] * rows_[i][num_columns_];
    }
    return z;
  }

  // Pivots basic columns >= first_artificial out of the basis; rows where no
  // such pivot exists are redundant and are dropped.
  void EvictArtificials(int first_artificial) {
    for (int i = 0; i < num_rows();) {
      if (basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      std::optional<int> column;
      for (int j = 0; j < first_artificial && !column; ++j) {
        if (rows_[i][j] != 0) column = j;
      }
      if (column) {
        Pivot(i, *column);
        ++i;
      } else {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  std::vector<Rational> Values(int count) const {
    std::vector<Rational> x(count, Rational(0));
    for (int i = 0; i < num_rows(); ++i) {
      if (basis_[i] < count) x[basis_[i]] = rows_[i][num_columns_];
    }
    return x;
  }

 private:
  int num_rows() const { return static_cast<int>(rows_.size()); }

  bool IsBasic(int j) const {
    for (int b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  Rational ReducedCost(const std::vector<Rational>& cost, int j) const {
    Rational r = cost[j];
    for (int i = 0; i < num_rows(); ++i) r -= cost[basis_[i]] * rows_[i][j];
    return r;
  }

  void Pivot(int row, int column) {
    const Rational pivot = rows_[row][column];
    for (Rational& v : rows_[row]) v /= pivot;
    for (int i = 0; i < num_rows(); ++i) {
      if (i == row || rows_[i][column] == 0) continue;
      const Rational factor = rows_[i][column];
      for (int j = 0; j <= num_columns_; ++j) {
        if (rows_[row][j] != 0) rows_[i][j] -= factor * rows_[row][j];
      }
    }
    basis_[row] = column;
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  int num_columns_;
};

}  // namespace

LpSolution SolveLinearProgram(const LinearProgram& lp) {
  const int n = static_cast<int>(lp.objective.size());
  for (const LinearConstraint& c : lp.constraints) {
    if (static_cast<int>(c.coefficients.size()) != n) {
      throw std::invalid_argument("constraint width does not match objective");
    }
  }

  // Column layout: [original | slack/surplus | artificial | rhs].
  int num_slack = 0;
  for (const LinearConstraint& c : lp.constraints) {
    if (c.relation != Relation::kEqual) ++num_slack;
  }
  const int first_artificial = n + num_slack;
  std::vector<std::vector<Rational>> rows;
  std::vector<int> basis;
  std::vector<int> artificial_rows;
  int slack = n;
  for (const LinearConstraint& c : lp.constraints) {
    std::vector<Rational> row(first_artificial, Rational(0));
    for (int j = 0; j < n; ++j) row[j] = c.coefficients[j];
    Rational rhs = c.rhs;
    int slack_column = -1;
    if (c.relation != Relation::kEqual) {
      slack_column = slack++;
      row[slack_column] = c.relation == Relation::kLessEqual ? 1 : -1;
    }
    if (rhs < 0) {
      for (Rational& v : row) v = -v;
      rhs = -rhs;
    }
    if (slack_column >= 0 && row[slack_column] == 1) {
      basis.push_back(slack_column);
    } else {
      basis.push_back(-1);
      artificial_rows.push_back(static_cast<int>(rows.size()));
    }
    row.push_back(rhs);
    rows.push_back(std::move(row));
  }
  const int num_artificial = static_cast<int>(artificial_rows.size());
  const int num_columns = first_artificial + num_artificial;
  for (auto& row : rows) {
    Rational rhs = row.back();
    row.pop_back();
    row.resize(num_columns, Rational(0));
    row.push_back(rhs);
  }
  for (int k = 0; k < num_artificial; ++k) {
    rows[artificial_rows[k]][first_artificial + k] = 1;
    basis[artificial_rows[k]] = first_artificial + k;
  }

  Tableau tableau(std::move(rows), std::move(basis), num_columns);
  LpSolution solution;

  std::vector<Rational> phase1(num_columns, Rational(0));
  for (int k = 0; k < num_artificial; ++k) phase1[first_artificial + k] = 1;
  tableau.Minimize(phase1, num_columns);
  if (tableau.Objective(phase1) != 0) {
    solution.status = LpStatus::kInfeasible;
    return solution;
  }
  tableau.EvictArtificials(first_artificial);

  std::vector<Rational> cost(num_columns, Rational(0));
  for (int j = 0; j < n; ++j) {
    cost[j] = lp.maximize ? -lp.objective[j] : lp.objective[j];
  }
  if (!tableau.Minimize(cost, first_artificial)) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }
  solution.status = LpStatus::kOptimal;
  const Rational z = tableau.Objective(cost);
  solution.objective = lp.maximize ? Rational(-z) : z;
  solution.values = tableau.Values(n);
  return solution;
}

}  // namespace netgame
