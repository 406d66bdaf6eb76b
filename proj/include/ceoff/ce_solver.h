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

// Adaptive-sampling cross-entropy (ASCE) solver for the offloading problem.
//
// The solver keeps one Bernoulli probability per (task, processor) entry of
// the assignment matrix. Each iteration draws a batch of feasible
// assignments block by block, keeps the lowest-cost elites, refits the
// probabilities to the elite frequencies and blends the fit into the
// previous probabilities with a learning rate.

#ifndef CEOFF_CE_SOLVER_H_
#define CEOFF_CE_SOLVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ceoff/model.h"
#include "ceoff/rng.h"

namespace ceoff {

// Probabilities u(n, m) = Pr(x(n, m) = 1), stored block by block: all tasks
// for processor 0, then all tasks for processor 1, and so on.
class ProbabilityIndicator {
 public:
  ProbabilityIndicator() = default;
  ProbabilityIndicator(int tasks, int processors, double fill);

  int tasks() const { return tasks_; }
  int processors() const { return processors_; }
  std::size_t size() const { return values_.size(); }

  double at(int task, int processor) const { return values_[Offset(task, processor)]; }
  void set(int task, int processor, double p) { values_[Offset(task, processor)] = p; }

  std::span<const double> values() const { return values_; }
  std::span<const double> block(int processor) const {
    return std::span<const double>(values_).subspan(
        static_cast<std::size_t>(processor) * tasks_, tasks_);
  }

  friend bool operator==(const ProbabilityIndicator&,
                         const ProbabilityIndicator&) = default;

 private:
  std::size_t Offset(int task, int processor) const {
    return static_cast<std::size_t>(processor) * tasks_ + task;
  }

  int tasks_ = 0;
  int processors_ = 0;
  std::vector<double> values_;
};

struct SolverConfig {
  int samples = 200;
  int elites = 20;
  double learning_rate = 0.8;
  int iterations = 30;
  std::uint64_t seed = 1;
  // Stop once the largest per-entry change of the indicator stays below this
  // for kEarlyStopPatience consecutive iterations. nullopt runs the full
  // budget.
  std::optional<double> early_stop_tolerance = 1e-6;
};

inline constexpr int kEarlyStopPatience = 3;

// Throws ConfigError.
void ValidateConfig(const SolverConfig& config);

struct Sample {
  std::vector<int> choices;  // processor per task
  double objective = 0.0;

  Assignment ToAssignment(int processors) const {
    return Assignment::FromChoices(choices, processors);
  }
};

struct SampleBatch {
  int processors = 0;
  std::vector<Sample> samples;
};

// Sorted by ascending objective; ties keep batch order.
struct EliteSet {
  int processors = 0;
  std::vector<Sample> members;
  std::vector<int> batch_indices;
};

struct IterationRecord {
  int iteration = 0;
  double batch_min = 0.0;
  double batch_mean = 0.0;
  double incumbent_best = 0.0;
  ProbabilityIndicator indicator;  // after this iteration's update
};

struct SolveResult {
  Assignment best_assignment;
  double best_objective = 0.0;
  std::vector<IterationRecord> trace;
  int iterations_run = 0;
  bool converged = false;
};

// All entries 0.5, for N tasks and M access points.
ProbabilityIndicator InitIndicator(int tasks, int caps);

// Adaptive block sampling. Blocks (processors) are visited in a uniformly
// random order. In each block, every task not yet placed is placed there
// with its block probability; a placed task has probability zero in every
// later block. Tasks still unplaced when one block remains go to that block,
// so the result always has exactly one processor per task.
std::vector<int> DrawChoices(const ProbabilityIndicator& indicator,
                             SplitMix64& rng);
Assignment DrawSample(const ProbabilityIndicator& indicator, SplitMix64& rng);

// The random stream used for sample `index` of iteration `iteration`.
inline SplitMix64 SampleStream(std::uint64_t seed, int iteration, int index) {
  return Substream(seed, {static_cast<std::uint64_t>(iteration),
                          static_cast<std::uint64_t>(index)});
}

// Throws ConfigError unless 1 <= elites <= batch size.
EliteSet SelectElites(const SampleBatch& batch, int elites);

// Entrywise mean of the elite assignment matrices.
ProbabilityIndicator EliteIndicator(const EliteSet& elites);

// alpha * fitted + (1 - alpha) * previous, entrywise. Throws ConfigError if
// alpha is outside [0, 1].
ProbabilityIndicator Smooth(const ProbabilityIndicator& fitted,
                            const ProbabilityIndicator& previous,
                            double alpha);

// Runs the full iteration. threads == 1 uses the serial batch kernel;
// threads == 0 lets OpenMP pick. Results do not depend on the thread count.
SolveResult Solve(const Scenario& scenario, const SolverConfig& config,
                  int threads = 0);

}  // namespace ceoff

#endif  // CEOFF_CE_SOLVER_H_
