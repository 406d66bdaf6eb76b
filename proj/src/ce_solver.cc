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

#include "ceoff/ce_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ceoff/batch_kernels.h"
#include "ceoff/errors.h"

namespace ceoff {

ProbabilityIndicator::ProbabilityIndicator(int tasks, int processors,
                                           double fill)
    : tasks_(tasks),
      processors_(processors),
      values_(static_cast<std::size_t>(tasks) * processors, fill) {}

void ValidateConfig(const SolverConfig& config) {
  if (config.samples < 1) throw ConfigError("samples must be >= 1");
  if (config.elites < 1 || config.elites > config.samples) {
    throw ConfigError("elites must be in 1..samples (got " +
                      std::to_string(config.elites) + " with samples " +
                      std::to_string(config.samples) + ")");
  }
  if (!(config.learning_rate >= 0.0 && config.learning_rate <= 1.0)) {
    throw ConfigError("learning_rate must be in [0, 1]");
  }
  if (config.iterations < 1) throw ConfigError("iterations must be >= 1");
  if (config.early_stop_tolerance &&
      !(std::isfinite(*config.early_stop_tolerance) &&
        *config.early_stop_tolerance >= 0.0)) {
    throw ConfigError("early_stop_tolerance must be a nonnegative number");
  }
}

ProbabilityIndicator InitIndicator(int tasks, int caps) {
  if (tasks < 1 || caps < 0) {
    throw ConfigError("indicator needs at least one task and M >= 0");
  }
  return ProbabilityIndicator(tasks, caps + 1, 0.5);
}

std::vector<int> DrawChoices(const ProbabilityIndicator& indicator,
                             SplitMix64& rng) {
  const int tasks = indicator.tasks();
  std::vector<int> choices(tasks, -1);
  std::vector<int> open_blocks(indicator.processors());
  std::iota(open_blocks.begin(), open_blocks.end(), 0);

  while (open_blocks.size() > 1) {
    auto pick = static_cast<std::ptrdiff_t>(UniformIndex(rng, open_blocks.size()));
    const int block = open_blocks[pick];
    open_blocks.erase(open_blocks.begin() + pick);
    for (int n = 0; n < tasks; ++n) {
      // Placed tasks are skipped: their probability in open blocks is zero.
      if (choices[n] >= 0) continue;
      if (Uniform01(rng) < indicator.at(n, block)) choices[n] = block;
    }
  }
  for (int& c : choices) {
    if (c < 0) c = open_blocks.front();
  }
  return choices;
}

Assignment DrawSample(const ProbabilityIndicator& indicator, SplitMix64& rng) {
  return Assignment::FromChoices(DrawChoices(indicator, rng),
                                 indicator.processors());
}

EliteSet SelectElites(const SampleBatch& batch, int elites) {
  const int size = static_cast<int>(batch.samples.size());
  if (elites < 1 || elites > size) {
    throw ConfigError("cannot select " + std::to_string(elites) +
                      " elites from a batch of " + std::to_string(size));
  }
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return batch.samples[a].objective < batch.samples[b].objective;
  });
  EliteSet set;
  set.processors = batch.processors;
  set.batch_indices.assign(order.begin(), order.begin() + elites);
  set.members.reserve(elites);
  for (int i : set.batch_indices) set.members.push_back(batch.samples[i]);
  return set;
}

ProbabilityIndicator EliteIndicator(const EliteSet& elites) {
  if (elites.members.empty()) throw ConfigError("elite set is empty");
  const int tasks = static_cast<int>(elites.members.front().choices.size());
  std::vector<int> counts(static_cast<std::size_t>(tasks) * elites.processors, 0);
  for (const Sample& s : elites.members) {
    for (int n = 0; n < tasks; ++n) ++counts[s.choices[n] * tasks + n];
  }
  const double size = static_cast<double>(elites.members.size());
  ProbabilityIndicator fitted(tasks, elites.processors, 0.0);
  for (int m = 0; m < elites.processors; ++m) {
    for (int n = 0; n < tasks; ++n) fitted.set(n, m, counts[m * tasks + n] / size);
  }
  return fitted;
}

ProbabilityIndicator Smooth(const ProbabilityIndicator& fitted,
                            const ProbabilityIndicator& previous,
                            double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("learning rate must be in [0, 1]");
  }
  if (fitted.tasks() != previous.tasks() ||
      fitted.processors() != previous.processors()) {
    throw ConfigError("indicator shapes differ");
  }
  ProbabilityIndicator out(fitted.tasks(), fitted.processors(), 0.0);
  for (int m = 0; m < fitted.processors(); ++m) {
    for (int n = 0; n < fitted.tasks(); ++n) {
      const double p =
          alpha * fitted.at(n, m) + (1.0 - alpha) * previous.at(n, m);
      out.set(n, m, std::clamp(p, 0.0, 1.0));
    }
  }
  return out;
}

namespace {

double MaxChange(const ProbabilityIndicator& a, const ProbabilityIndicator& b) {
  double change = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    change = std::max(change, std::abs(a.values()[i] - b.values()[i]));
  }
  return change;
}

}  // namespace

SolveResult Solve(const Scenario& scenario, const SolverConfig& config,
                  int threads) {
  ValidateScenario(scenario);
  ValidateConfig(config);
  const CostTable table(scenario);
  const int processors = scenario.num_processors();

  ProbabilityIndicator indicator =
      InitIndicator(scenario.num_tasks(), scenario.num_caps());
  SolveResult result;
  result.best_objective = std::numeric_limits<double>::infinity();
  std::vector<int> best_choices;
  int quiet_streak = 0;

  for (int t = 0; t < config.iterations; ++t) {
    SampleBatch batch =
        threads == 1
            ? DrawBatchSerial(indicator, table, config.samples, config.seed, t)
            : DrawBatch(indicator, table, config.samples, config.seed, t,
                        threads);

    double batch_min = std::numeric_limits<double>::infinity();
    for (const Sample& s : batch.samples) {
      batch_min = std::min(batch_min, s.objective);
      if (s.objective < result.best_objective) {
        result.best_objective = s.objective;
        best_choices = s.choices;
      }
    }

    // Mean as min + mean excess, so it never rounds below the minimum.
    double excess = 0.0;
    for (const Sample& s : batch.samples) excess += s.objective - batch_min;
    const double batch_mean = batch_min + excess / config.samples;

    EliteSet elites = SelectElites(batch, config.elites);
    ProbabilityIndicator next =
        Smooth(EliteIndicator(elites), indicator, config.learning_rate);
    const double change = MaxChange(next, indicator);
    indicator = std::move(next);

    result.trace.push_back({t, batch_min, batch_mean,
                            result.best_objective, indicator});
    result.iterations_run = t + 1;

    const double tolerance = config.early_stop_tolerance.value_or(1e-6);
    quiet_streak = change < tolerance ? quiet_streak + 1 : 0;
    result.converged = quiet_streak >= kEarlyStopPatience;
    if (result.converged && config.early_stop_tolerance) break;
  }

  result.best_assignment = Assignment::FromChoices(best_choices, processors);
  return result;
}

}  // namespace ceoff
