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

// Dense two-phase tableau simplex for small linear programs:
//
//   minimize c'x  subject to  a_i'x (<=|=|>=) b_i,  x >= 0.
//
// Pivoting follows Bland's rule (lowest-index entering column, lowest-index
// leaving row among ratio ties), which rules out cycling.

#ifndef CEOFF_SIMPLEX_H_
#define CEOFF_SIMPLEX_H_

#include <vector>

namespace ceoff::simplex {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<double> coeffs;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

struct LinearProgram {
  std::vector<double> objective;  // one entry per variable
  std::vector<Constraint> constraints;

  int num_vars() const { return static_cast<int>(objective.size()); }
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  int pivots = 0;
};

Solution Solve(const LinearProgram& lp, double tolerance = 1e-9);

}  // namespace ceoff::simplex

#endif  // CEOFF_SIMPLEX_H_
