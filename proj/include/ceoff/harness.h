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

// Experiment harness: random scenario generation, multi-trial sweeps that
// compare solvers on paired instances, and their CSV tables.
//
// Trials within a sweep run in parallel. Each trial owns its scenario
// stream and solver seed, and averages are reduced in trial order, so the
// output does not depend on the thread count.

#ifndef CEOFF_HARNESS_H_
#define CEOFF_HARNESS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ceoff/ce_solver.h"
#include "ceoff/csv.h"
#include "ceoff/model.h"

namespace ceoff {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

// Defaults: local CPU at 200 Mcycles/s, access points at 2.0, 2.2 and
// 2.4 Gcycles/s, every link at 10 Mbit/s, powers 0.8 / 1.258 / 1.181 W.
// The task ranges are this project's choice; see README.
struct ScenarioSpec {
  int tasks = 6;
  int caps = 3;
  Range input_bits{1e6, 8e6};
  Range output_bits{0.5e6, 4e6};
  Range cycles{0.1e9, 1.5e9};
  double local_rate_cps = 200e6;
  std::vector<double> cap_rates_cps{2.0e9, 2.2e9, 2.4e9};
  double link_bps = 10e6;
  PowerProfile power{0.8, 1.258, 1.181};
  Weights weights{0.5, 0.5};
  int trials = 100;
  std::uint64_t seed = 1;
};

// Throws ConfigError.
void ValidateScenarioSpec(const ScenarioSpec& spec);

// Deterministic in (spec.seed, trial). Task draws do not depend on spec.caps,
// so the same trial index yields the same tasks for every M.
Scenario GenerateScenario(const ScenarioSpec& spec, int trial);

// Solver seed used for a given trial.
std::uint64_t TrialSeed(std::uint64_t seed, int trial);

enum class Method { kAsce, kBnb, kExhaustive, kLpr, kNoMec, kFullMec };

std::string_view MethodName(Method method);
// Throws ConfigError on an unknown name.
Method ParseMethod(std::string_view name);

struct MethodOutcome {
  Assignment assignment;
  Evaluation evaluation;
  std::int64_t work = 0;  // samples drawn, nodes, enumerated points or pivots
  double wall_ms = 0.0;
};

// Runs one method and re-validates its assignment (throws FeasibilityError
// if it fails). FullMec offloads everything to access point 1.
MethodOutcome RunMethod(Method method, const Scenario& scenario,
                        const SolverConfig& config, int threads = 1);

// --- hyperparameter convergence ------------------------------------------

struct ConvergenceSeries {
  int samples = 0;
  int elites = 0;
  // Per iteration, averaged over trials.
  std::vector<double> incumbent_best;
  std::vector<double> batch_min;
  std::vector<double> batch_mean;
};

// Each (samples, elites) pair overrides `base`; early stopping is disabled so
// every trial yields a full-length trace.
std::vector<ConvergenceSeries> RunConvergence(
    const ScenarioSpec& spec, const SolverConfig& base,
    std::span<const std::pair<int, int>> sample_elite_pairs, int threads = 0);
CsvTable ConvergenceTable(std::span<const ConvergenceSeries> series);

// --- task size sweep ------------------------------------------------------

struct SizePoint {
  double scale = 1.0;
  Method method = Method::kAsce;
  double mean_objective = 0.0;
  double mean_latency = 0.0;
  double mean_energy = 0.0;
};

// All three task ranges are multiplied by each scale.
std::vector<SizePoint> RunSizeSweep(const ScenarioSpec& spec,
                                    std::span<const double> scales,
                                    std::span<const Method> methods,
                                    const SolverConfig& config,
                                    int threads = 0);
CsvTable SizeTable(std::span<const SizePoint> points);

// --- weight ratio sweep ---------------------------------------------------

// q = -1.8, -1.6, ..., 2.0 (20 points); weight ratio w_e / w_t = 10^q.
std::vector<double> LambdaExponentGrid();
// Weights with w_e / w_t = 10^q and w_t + w_e = 1.
Weights WeightsForExponent(double q);

struct LambdaPoint {
  double q = 0.0;
  int caps = 0;
  Weights weights;
  double mean_objective = 0.0;
  double mean_latency = 0.0;
  double mean_energy = 0.0;
  double mean_all_local_energy = 0.0;
};

std::vector<LambdaPoint> RunLambdaSweep(const ScenarioSpec& spec,
                                        std::span<const int> caps,
                                        const SolverConfig& config,
                                        int threads = 0);
CsvTable LambdaTable(std::span<const LambdaPoint> points);

// --- method comparison ----------------------------------------------------

struct MethodSummary {
  int tasks = 0;
  Method method = Method::kAsce;
  double mean_objective = 0.0;
  double mean_work = 0.0;
  double mean_wall_ms = 0.0;
};

// An empty `task_counts` means {spec.tasks}.
std::vector<MethodSummary> CompareMethods(const ScenarioSpec& spec,
                                          std::span<const int> task_counts,
                                          std::span<const Method> methods,
                                          const SolverConfig& config,
                                          int threads = 0);
// Wall time is left out so the table is reproducible.
CsvTable CompareTable(std::span<const MethodSummary> rows);

// Everything a sweep run needs besides its kind and output location.
struct SweepSpec {
  ScenarioSpec scenario;
  SolverConfig solver;
  std::vector<std::pair<int, int>> convergence_configs{
      {100, 10}, {200, 20}, {400, 40}};
  std::vector<double> size_scales{0.25, 0.5, 1.0, 1.5, 2.0};
  std::vector<Method> size_methods{Method::kAsce, Method::kBnb, Method::kLpr,
                                   Method::kNoMec, Method::kFullMec};
  std::vector<int> lambda_caps{1, 2, 3};
  std::vector<int> compare_tasks;
  std::vector<Method> compare_methods{Method::kAsce, Method::kBnb,
                                      Method::kLpr};
};

// iter,batch_min,batch_mean,incumbent_best
CsvTable TraceTable(const SolveResult& result);

// Spearman rank correlation with average ranks for ties. NaN if either side
// is constant or the sizes differ.
double SpearmanCorrelation(std::span<const double> x, std::span<const double> y);

}  // namespace ceoff

#endif  // CEOFF_HARNESS_H_
