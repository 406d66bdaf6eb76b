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

// Reference solvers: exhaustive enumeration and branch-and-bound (exact),
// linear-programming relaxation with rounding, and the two trivial
// baselines (everything local, everything on one access point).

#ifndef CEOFF_ORACLES_H_
#define CEOFF_ORACLES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ceoff/model.h"
#include "ceoff/simplex.h"

namespace ceoff {

struct OracleResult {
  Assignment assignment;
  double objective = 0.0;
  // Assignments enumerated (exhaustive), search nodes visited (BnB) or
  // simplex pivots (LP relaxation). Zero for the baselines.
  std::int64_t work = 0;
  // LP relaxation only: the optimal value of the relaxed program.
  std::optional<double> relaxed_objective;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Global minimizer by enumeration in lexicographic order of the choice
// vector (processor of task 0 varies slowest); among equal objectives the
// lexicographically smallest choice vector wins. Throws SizeError when
// (M+1)^N exceeds `cap`.
OracleResult ExhaustiveSolve(const Scenario& scenario,
                             std::uint64_t cap = kDefaultEnumerationCap);

// Depth-first branch-and-bound over tasks in index order, trying processors
// 0..M. The bound at a partial assignment is its accumulated objective.
// Returns the same assignment as ExhaustiveSolve.
OracleResult BnbSolve(const Scenario& scenario);

// Relaxed program over x(n, m) in [0, 1] plus a makespan variable t:
// minimize w_t t + w_e E(x)  s.t.  t >= T_m(x) for all m, sum_m x(n, m) = 1.
// Variable x(n, m) has column n * (M + 1) + m; t is the last column.
simplex::LinearProgram BuildRelaxation(const Scenario& scenario);

// Each task goes to its largest relaxed entry; near-ties go to the lowest
// processor index.
std::vector<int> RoundRelaxed(std::span<const double> relaxed, int tasks,
                              int processors);

// The reported objective is the rounded assignment's true cost.
OracleResult LprSolve(const Scenario& scenario);

OracleResult NoMec(const Scenario& scenario);
// Throws DomainError unless 1 <= cap <= M.
OracleResult FullMec(const Scenario& scenario, int cap = 1);

}  // namespace ceoff

#endif  // CEOFF_ORACLES_H_
