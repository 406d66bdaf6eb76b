// Copyright 2026 The ceoff Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ceoff/simplex.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ceoff::simplex {
namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp, double tol) : tol_(tol) {
    rows_ = static_cast<int>(lp.constraints.size());
    num_original_ = lp.num_vars();

    // Column layout: original | slack/surplus | artificial | rhs.
    int slacks = 0;
    int artificials = 0;
    for (const Constraint& c : lp.constraints) {
      Sense sense = Normalized(c).sense;
      if (sense != Sense::kEqual) ++slacks;
      if (sense != Sense::kLessEqual) ++artificials;
    }
    first_artificial_ = num_original_ + slacks;
    cols_ = first_artificial_ + artificials;
    cells_.assign(static_cast<std::size_t>(rows_) * (cols_ + 1), 0.0);
    basis_.assign(rows_, -1);

    int next_slack = num_original_;
    int next_artificial = first_artificial_;
    for (int i = 0; i < rows_; ++i) {
      Constraint c = Normalized(lp.constraints[i]);
      if (static_cast<int>(c.coeffs.size()) != num_original_) {
        throw std::invalid_argument("constraint width differs from objective");
      }
      for (int j = 0; j < num_original_; ++j) at(i, j) = c.coeffs[j];
      rhs(i) = c.rhs;
      switch (c.sense) {
        case Sense::kLessEqual:
          at(i, next_slack) = 1.0;
          basis_[i] = next_slack++;
          break;
        case Sense::kGreaterEqual:
          at(i, next_slack++) = -1.0;
          at(i, next_artificial) = 1.0;
          basis_[i] = next_artificial++;
          break;
        case Sense::kEqual:
          at(i, next_artificial) = 1.0;
          basis_[i] = next_artificial++;
          break;
      }
    }
  }

  // Returns false when unbounded.
  bool Optimize(const std::vector<double>& cost, int allowed_cols) {
    std::vector<double> reduced(cols_);
    for (;;) {
      for (int j = 0; j < cols_; ++j) {
        double r = cost[j];
        for (int i = 0; i < rows_; ++i) r -= cost[basis_[i]] * at(i, j);
        reduced[j] = r;
      }
      int entering = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        if (reduced[j] < -tol_) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      int leaving = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows_; ++i) {
        const double a = at(i, entering);
        if (a <= tol_) continue;
        const double ratio = rhs(i) / a;
        if (leaving < 0 || ratio < best - tol_) {
          best = ratio;
          leaving = i;
        } else if (ratio <= best + tol_ && basis_[i] < basis_[leaving]) {
          leaving = i;
        }
      }
      if (leaving < 0) return false;
      Pivot(leaving, entering);
    }
  }

  // Pivots basic artificials at level zero out of the basis where possible.
  void EvictArtificials() {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (int j = 0; j < first_artificial_; ++j) {
        if (std::abs(at(i, j)) > tol_) {
          Pivot(i, j);
          break;
        }
      }
    }
  }

  double ObjectiveValue(const std::vector<double>& cost) const {
    double v = 0.0;
    for (int i = 0; i < rows_; ++i) v += cost[basis_[i]] * rhs(i);
    return v;
  }

  std::vector<double> Primal() const {
    std::vector<double> x(num_original_, 0.0);
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < num_original_) x[basis_[i]] = rhs(i);
    }
    return x;
  }

  int cols() const { return cols_; }
  int first_artificial() const { return first_artificial_; }
  int num_original() const { return num_original_; }
  int pivots() const { return pivots_; }

 private:
  static Constraint Normalized(const Constraint& c) {
    if (c.rhs >= 0.0) return c;
    Constraint flipped = c;
    for (double& a : flipped.coeffs) a = -a;
    flipped.rhs = -c.rhs;
    if (c.sense == Sense::kLessEqual) flipped.sense = Sense::kGreaterEqual;
    if (c.sense == Sense::kGreaterEqual) flipped.sense = Sense::kLessEqual;
    return flipped;
  }

  double& at(int i, int j) {
    return cells_[static_cast<std::size_t>(i) * (cols_ + 1) + j];
  }
  double at(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * (cols_ + 1) + j];
  }
  double& rhs(int i) { return at(i, cols_); }
  double rhs(int i) const { return at(i, cols_); }

  void Pivot(int row, int col) {
    ++pivots_;
    const double p = at(row, col);
    for (int j = 0; j <= cols_; ++j) at(row, j) /= p;
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) at(i, j) -= f * at(row, j);
      at(i, col) = 0.0;
    }
    basis_[row] = col;
  }

  double tol_;
  int rows_ = 0;
  int cols_ = 0;
  int num_original_ = 0;
  int first_artificial_ = 0;
  int pivots_ = 0;
  std::vector<double> cells_;
  std::vector<int> basis_;
};

}  // namespace

Solution Solve(const LinearProgram& lp, double tolerance) {
  Tableau tableau(lp, tolerance);
  Solution solution;

  std::vector<double> phase1(tableau.cols(), 0.0);
  for (int j = tableau.first_artificial(); j < tableau.cols(); ++j) {
    phase1[j] = 1.0;
  }
  tableau.Optimize(phase1, tableau.cols());
  if (tableau.ObjectiveValue(phase1) > tolerance * 1e3) {
    solution.status = Status::kInfeasible;
    solution.pivots = tableau.pivots();
    return solution;
  }
  tableau.EvictArtificials();

  std::vector<double> phase2(tableau.cols(), 0.0);
  for (int j = 0; j < tableau.num_original(); ++j) phase2[j] = lp.objective[j];
  const bool bounded = tableau.Optimize(phase2, tableau.first_artificial());
  solution.pivots = tableau.pivots();
  if (!bounded) {
    solution.status = Status::kUnbounded;
    return solution;
  }
  solution.status = Status::kOptimal;
  solution.x = tableau.Primal();
  solution.objective = tableau.ObjectiveValue(phase2);
  return solution;
}

}  // namespace ceoff::simplex
