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

#include "ceoff/oracles.h"

#include <limits>
#include <string>

#include "ceoff/errors.h"

namespace ceoff {
namespace {

OracleResult FromChoices(const CostTable& table, const std::vector<int>& choices,
                         std::int64_t work) {
  OracleResult r;
  r.assignment = Assignment::FromChoices(choices, table.processors());
  r.objective = EvaluateChoices(table, choices).objective;
  r.work = work;
  return r;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const CostTable& table)
      : table_(table), choices_(table.tasks(), 0) {}

  void Run() { Visit(0, CostAccumulator(table_)); }

  const std::vector<int>& best() const { return best_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  void Visit(int depth, const CostAccumulator& partial) {
    ++nodes_;
    // Every term is nonnegative, so no completion can beat this bound.
    const double bound = partial.objective();
    if (bound >= incumbent_) return;
    if (depth == table_.tasks()) {
      incumbent_ = bound;
      best_ = choices_;
      return;
    }
    for (int m = 0; m < table_.processors(); ++m) {
      CostAccumulator child = partial;
      child.Add(depth, m);
      choices_[depth] = m;
      Visit(depth + 1, child);
    }
  }

  const CostTable& table_;
  std::vector<int> choices_;
  std::vector<int> best_;
  double incumbent_ = std::numeric_limits<double>::infinity();
  std::int64_t nodes_ = 0;
};

}  // namespace

OracleResult ExhaustiveSolve(const Scenario& scenario, std::uint64_t cap) {
  ValidateScenario(scenario);
  const int tasks = scenario.num_tasks();
  const int processors = scenario.num_processors();

  std::uint64_t total = 1;
  for (int n = 0; n < tasks; ++n) {
    if (total > cap / processors) {
      throw SizeError("exhaustive enumeration of " +
                      std::to_string(processors) + "^" +
                      std::to_string(tasks) + " assignments exceeds the cap of " +
                      std::to_string(cap));
    }
    total *= processors;
  }

  const CostTable table(scenario);
  std::vector<int> choices(tasks, 0);
  std::vector<int> best = choices;
  double best_objective = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 0; k < total; ++k) {
    const double objective = EvaluateChoices(table, choices).objective;
    if (objective < best_objective) {
      best_objective = objective;
      best = choices;
    }
    // Odometer increment, last task fastest.
    for (int n = tasks - 1; n >= 0; --n) {
      if (++choices[n] < processors) break;
      choices[n] = 0;
    }
  }
  return FromChoices(table, best, static_cast<std::int64_t>(total));
}

OracleResult BnbSolve(const Scenario& scenario) {
  ValidateScenario(scenario);
  const CostTable table(scenario);
  BranchAndBound search(table);
  search.Run();
  return FromChoices(table, search.best(), search.nodes());
}

simplex::LinearProgram BuildRelaxation(const Scenario& scenario) {
  const CostTable table(scenario);
  const int tasks = table.tasks();
  const int processors = table.processors();
  const int vars = tasks * processors + 1;
  const int makespan = vars - 1;
  const PowerProfile& power = table.power();
  const Weights& w = table.weights();

  simplex::LinearProgram lp;
  lp.objective.assign(vars, 0.0);
  for (int n = 0; n < tasks; ++n) {
    for (int m = 0; m < processors; ++m) {
      const TaskTimes& t = table.times(n, m);
      const double energy = m == 0 ? power.local_w * t.compute
                                   : power.tx_w * t.uplink + power.rx_w * t.downlink;
      lp.objective[n * processors + m] = w.energy * energy;
    }
  }
  lp.objective[makespan] = w.latency;

  for (int m = 0; m < processors; ++m) {
    simplex::Constraint c;
    c.coeffs.assign(vars, 0.0);
    for (int n = 0; n < tasks; ++n) c.coeffs[n * processors + m] = table.busy(n, m);
    c.coeffs[makespan] = -1.0;
    c.sense = simplex::Sense::kLessEqual;
    c.rhs = 0.0;
    lp.constraints.push_back(std::move(c));
  }
  for (int n = 0; n < tasks; ++n) {
    simplex::Constraint c;
    c.coeffs.assign(vars, 0.0);
    for (int m = 0; m < processors; ++m) c.coeffs[n * processors + m] = 1.0;
    c.sense = simplex::Sense::kEqual;
    c.rhs = 1.0;
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

std::vector<int> RoundRelaxed(std::span<const double> relaxed, int tasks,
                              int processors) {
  constexpr double kTieTolerance = 1e-9;
  std::vector<int> choices(tasks, 0);
  for (int n = 0; n < tasks; ++n) {
    double best = relaxed[n * processors];
    for (int m = 1; m < processors; ++m) {
      if (relaxed[n * processors + m] > best + kTieTolerance) {
        best = relaxed[n * processors + m];
        choices[n] = m;
      }
    }
  }
  return choices;
}

OracleResult LprSolve(const Scenario& scenario) {
  ValidateScenario(scenario);
  const CostTable table(scenario);
  simplex::Solution lp = simplex::Solve(BuildRelaxation(scenario));
  if (lp.status != simplex::Status::kOptimal) {
    // All-local is always feasible and the objective is bounded below by 0.
    throw std::logic_error("LP relaxation did not reach an optimum");
  }
  OracleResult r = FromChoices(
      table, RoundRelaxed(lp.x, table.tasks(), table.processors()), lp.pivots);
  r.relaxed_objective = lp.objective;
  return r;
}

OracleResult NoMec(const Scenario& scenario) {
  ValidateScenario(scenario);
  const CostTable table(scenario);
  return FromChoices(table, std::vector<int>(table.tasks(), 0), 0);
}

OracleResult FullMec(const Scenario& scenario, int cap) {
  ValidateScenario(scenario);
  if (cap < 1 || cap > scenario.num_caps()) {
    throw DomainError("full offload target must be an access point in 1.." +
                      std::to_string(scenario.num_caps()) + ", got " +
                      std::to_string(cap));
  }
  const CostTable table(scenario);
  return FromChoices(table, std::vector<int>(table.tasks(), cap), 0);
}

}  // namespace ceoff
