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

#include "ceoff/harness.h"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <string>

#include "ceoff/errors.h"
#include "ceoff/oracles.h"
#include "ceoff/rng.h"

namespace ceoff {
namespace {

constexpr std::uint64_t kTaskStreamSalt = 0x7461736bULL;    // "task"
constexpr std::uint64_t kSolverStreamSalt = 0x736f6c76ULL;  // "solv"

// Runs fn(trial) for every trial on an OpenMP team and rethrows the first
// failure (by trial index) on the calling thread.
template <typename Fn>
void ForEachTrial(int trials, int threads, Fn&& fn) {
  std::vector<std::exception_ptr> errors(trials);
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
  for (int t = 0; t < trials; ++t) {
    try {
      fn(t);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double Mean(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

void RequireRange(const Range& r, const std::string& name) {
  if (!(std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo > 0.0 &&
        r.lo <= r.hi)) {
    throw ConfigError(name + " range must satisfy 0 < lo <= hi");
  }
}

double Draw(SplitMix64& rng, const Range& r) {
  return std::min(r.hi, r.lo + (r.hi - r.lo) * Uniform01(rng));
}

ScenarioSpec Scaled(ScenarioSpec spec, double scale) {
  for (Range* r : {&spec.input_bits, &spec.output_bits, &spec.cycles}) {
    r->lo *= scale;
    r->hi *= scale;
  }
  return spec;
}

std::vector<double> Ranks(std::span<const double> v) {
  std::vector<int> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

void ValidateScenarioSpec(const ScenarioSpec& spec) {
  if (spec.tasks < 1) throw ConfigError("tasks must be >= 1");
  if (spec.caps < 0) throw ConfigError("caps must be >= 0");
  if (spec.caps > static_cast<int>(spec.cap_rates_cps.size())) {
    throw ConfigError("caps = " + std::to_string(spec.caps) + " but only " +
                      std::to_string(spec.cap_rates_cps.size()) +
                      " cap_rates_cps are given");
  }
  if (spec.trials < 1) throw ConfigError("trials must be >= 1");
  RequireRange(spec.input_bits, "input_bits");
  RequireRange(spec.output_bits, "output_bits");
  RequireRange(spec.cycles, "cycles");
  if (!(spec.local_rate_cps > 0.0) || !(spec.link_bps > 0.0)) {
    throw ConfigError("local_rate_cps and link_bps must be positive");
  }
  for (double r : spec.cap_rates_cps) {
    if (!(r > 0.0 && std::isfinite(r))) {
      throw ConfigError("cap_rates_cps entries must be positive");
    }
  }
  try {
    ValidateWeights(spec.weights);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (!(spec.power.local_w > 0.0 && spec.power.tx_w > 0.0 &&
        spec.power.rx_w > 0.0)) {
    throw ConfigError("power entries must be positive");
  }
}

Scenario GenerateScenario(const ScenarioSpec& spec, int trial) {
  ValidateScenarioSpec(spec);
  Scenario s;
  SplitMix64 rng = Substream(
      spec.seed, {kTaskStreamSalt, static_cast<std::uint64_t>(trial)});
  s.tasks.reserve(spec.tasks);
  for (int n = 0; n < spec.tasks; ++n) {
    Task task;
    task.input_bits = Draw(rng, spec.input_bits);
    task.output_bits = Draw(rng, spec.output_bits);
    task.cycles = Draw(rng, spec.cycles);
    s.tasks.push_back(task);
  }
  s.processors.push_back({0, spec.local_rate_cps, std::nullopt, std::nullopt});
  for (int m = 1; m <= spec.caps; ++m) {
    s.processors.push_back(
        {m, spec.cap_rates_cps[m - 1], spec.link_bps, spec.link_bps});
  }
  s.power = spec.power;
  s.weights = spec.weights;
  return s;
}

std::uint64_t TrialSeed(std::uint64_t seed, int trial) {
  return Mix64(Mix64(seed ^ kSolverStreamSalt) +
               static_cast<std::uint64_t>(trial));
}

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kAsce: return "asce";
    case Method::kBnb: return "bnb";
    case Method::kExhaustive: return "exhaustive";
    case Method::kLpr: return "lpr";
    case Method::kNoMec: return "nomec";
    case Method::kFullMec: return "fullmec";
  }
  return "?";
}

Method ParseMethod(std::string_view name) {
  for (Method m : {Method::kAsce, Method::kBnb, Method::kExhaustive,
                   Method::kLpr, Method::kNoMec, Method::kFullMec}) {
    if (MethodName(m) == name) return m;
  }
  throw ConfigError("unknown method '" + std::string(name) +
                    "' (expected asce, bnb, exhaustive, lpr, nomec or "
                    "fullmec)");
}

MethodOutcome RunMethod(Method method, const Scenario& scenario,
                        const SolverConfig& config, int threads) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  MethodOutcome out;
  switch (method) {
    case Method::kAsce: {
      SolveResult r = Solve(scenario, config, threads);
      out.assignment = std::move(r.best_assignment);
      out.work = static_cast<std::int64_t>(config.samples) * r.iterations_run;
      break;
    }
    case Method::kBnb:
    case Method::kExhaustive:
    case Method::kLpr:
    case Method::kNoMec:
    case Method::kFullMec: {
      OracleResult r = method == Method::kBnb          ? BnbSolve(scenario)
                       : method == Method::kExhaustive ? ExhaustiveSolve(scenario)
                       : method == Method::kLpr        ? LprSolve(scenario)
                       : method == Method::kNoMec      ? NoMec(scenario)
                                                       : FullMec(scenario, 1);
      out.assignment = std::move(r.assignment);
      out.work = r.work;
      break;
    }
  }
  out.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start)
                    .count();
  ValidationReport report = Validate(out.assignment, scenario);
  if (!report.ok()) {
    throw FeasibilityError(std::string(MethodName(method)) +
                           " returned an infeasible assignment: " +
                           report.ToString());
  }
  out.evaluation = Evaluate(out.assignment, scenario);
  return out;
}

std::vector<ConvergenceSeries> RunConvergence(
    const ScenarioSpec& spec, const SolverConfig& base,
    std::span<const std::pair<int, int>> sample_elite_pairs, int threads) {
  ValidateScenarioSpec(spec);
  if (sample_elite_pairs.empty()) {
    throw ConfigError("convergence sweep needs at least one configuration");
  }
  std::vector<ConvergenceSeries> out;
  for (const auto& [samples, elites] : sample_elite_pairs) {
    SolverConfig config = base;
    config.samples = samples;
    config.elites = elites;
    config.early_stop_tolerance.reset();
    ValidateConfig(config);

    const int iters = config.iterations;
    std::vector<std::vector<double>> best(spec.trials), bmin(spec.trials),
        bmean(spec.trials);
    ForEachTrial(spec.trials, threads, [&](int t) {
      SolverConfig trial_config = config;
      trial_config.seed = TrialSeed(config.seed, t);
      SolveResult r = Solve(GenerateScenario(spec, t), trial_config, 1);
      for (const IterationRecord& rec : r.trace) {
        best[t].push_back(rec.incumbent_best);
        bmin[t].push_back(rec.batch_min);
        bmean[t].push_back(rec.batch_mean);
      }
    });

    ConvergenceSeries series;
    series.samples = samples;
    series.elites = elites;
    for (int i = 0; i < iters; ++i) {
      double sb = 0.0, sm = 0.0, sa = 0.0;
      for (int t = 0; t < spec.trials; ++t) {
        sb += best[t][i];
        sm += bmin[t][i];
        sa += bmean[t][i];
      }
      series.incumbent_best.push_back(sb / spec.trials);
      series.batch_min.push_back(sm / spec.trials);
      series.batch_mean.push_back(sa / spec.trials);
    }
    out.push_back(std::move(series));
  }
  return out;
}

CsvTable ConvergenceTable(std::span<const ConvergenceSeries> series) {
  CsvTable table;
  table.header = {"samples",   "elites",    "iter",
                  "incumbent_best", "batch_min", "batch_mean"};
  for (const ConvergenceSeries& s : series) {
    for (std::size_t i = 0; i < s.incumbent_best.size(); ++i) {
      table.rows.push_back({std::to_string(s.samples), std::to_string(s.elites),
                            std::to_string(i), FormatNumber(s.incumbent_best[i]),
                            FormatNumber(s.batch_min[i]),
                            FormatNumber(s.batch_mean[i])});
    }
  }
  return table;
}

std::vector<SizePoint> RunSizeSweep(const ScenarioSpec& spec,
                                    std::span<const double> scales,
                                    std::span<const Method> methods,
                                    const SolverConfig& config, int threads) {
  ValidateScenarioSpec(spec);
  ValidateConfig(config);
  if (scales.empty() || methods.empty()) {
    throw ConfigError("size sweep needs at least one scale and one method");
  }
  std::vector<SizePoint> out;
  for (double scale : scales) {
    if (!(scale > 0.0 && std::isfinite(scale))) {
      throw ConfigError("size scales must be positive");
    }
    const ScenarioSpec scaled = Scaled(spec, scale);
    ValidateScenarioSpec(scaled);
    const std::size_t k = methods.size();
    std::vector<Evaluation> evals(static_cast<std::size_t>(spec.trials) * k);
    ForEachTrial(spec.trials, threads, [&](int t) {
      const Scenario scenario = GenerateScenario(scaled, t);
      SolverConfig trial_config = config;
      trial_config.seed = TrialSeed(config.seed, t);
      for (std::size_t i = 0; i < k; ++i) {
        evals[t * k + i] =
            RunMethod(methods[i], scenario, trial_config, 1).evaluation;
      }
    });
    for (std::size_t i = 0; i < k; ++i) {
      SizePoint p;
      p.scale = scale;
      p.method = methods[i];
      for (int t = 0; t < spec.trials; ++t) {
        p.mean_objective += evals[t * k + i].objective;
        p.mean_latency += evals[t * k + i].latency;
        p.mean_energy += evals[t * k + i].energy;
      }
      p.mean_objective /= spec.trials;
      p.mean_latency /= spec.trials;
      p.mean_energy /= spec.trials;
      out.push_back(p);
    }
  }
  return out;
}

CsvTable SizeTable(std::span<const SizePoint> points) {
  CsvTable table;
  table.header = {"scale", "method", "mean_objective", "mean_latency",
                  "mean_energy"};
  for (const SizePoint& p : points) {
    table.rows.push_back({FormatNumber(p.scale), std::string(MethodName(p.method)),
                          FormatNumber(p.mean_objective),
                          FormatNumber(p.mean_latency),
                          FormatNumber(p.mean_energy)});
  }
  return table;
}

std::vector<double> LambdaExponentGrid() {
  std::vector<double> grid;
  for (int k = 0; k < 20; ++k) grid.push_back((k - 9) / 5.0);
  return grid;
}

Weights WeightsForExponent(double q) {
  const double ratio = std::pow(10.0, q);
  return {1.0 / (1.0 + ratio), ratio / (1.0 + ratio)};
}

std::vector<LambdaPoint> RunLambdaSweep(const ScenarioSpec& spec,
                                        std::span<const int> caps,
                                        const SolverConfig& config,
                                        int threads) {
  ValidateScenarioSpec(spec);
  ValidateConfig(config);
  if (caps.empty()) throw ConfigError("lambda sweep needs at least one M");
  const std::vector<double> grid = LambdaExponentGrid();
  const std::size_t g = grid.size();
  std::vector<LambdaPoint> out;
  for (int m : caps) {
    ScenarioSpec per_m = spec;
    per_m.caps = m;
    if (m < 1) throw ConfigError("lambda sweep needs M >= 1");
    ValidateScenarioSpec(per_m);
    std::vector<Evaluation> evals(static_cast<std::size_t>(spec.trials) * g);
    std::vector<double> local_energy(spec.trials);
    ForEachTrial(spec.trials, threads, [&](int t) {
      Scenario scenario = GenerateScenario(per_m, t);
      SolverConfig trial_config = config;
      trial_config.seed = TrialSeed(config.seed, t);
      local_energy[t] = RunMethod(Method::kNoMec, scenario, trial_config).evaluation.energy;
      for (std::size_t i = 0; i < g; ++i) {
        scenario.weights = WeightsForExponent(grid[i]);
        evals[t * g + i] =
            RunMethod(Method::kAsce, scenario, trial_config, 1).evaluation;
      }
    });
    const double mean_local = Mean(local_energy);
    for (std::size_t i = 0; i < g; ++i) {
      LambdaPoint p;
      p.q = grid[i];
      p.caps = m;
      p.weights = WeightsForExponent(grid[i]);
      for (int t = 0; t < spec.trials; ++t) {
        p.mean_objective += evals[t * g + i].objective;
        p.mean_latency += evals[t * g + i].latency;
        p.mean_energy += evals[t * g + i].energy;
      }
      p.mean_objective /= spec.trials;
      p.mean_latency /= spec.trials;
      p.mean_energy /= spec.trials;
      p.mean_all_local_energy = mean_local;
      out.push_back(p);
    }
  }
  return out;
}

CsvTable LambdaTable(std::span<const LambdaPoint> points) {
  CsvTable table;
  table.header = {"q",           "caps",         "lambda_t",
                  "lambda_e",    "mean_objective", "mean_latency",
                  "mean_energy", "mean_all_local_energy"};
  for (const LambdaPoint& p : points) {
    table.rows.push_back({FormatNumber(p.q), std::to_string(p.caps),
                          FormatNumber(p.weights.latency),
                          FormatNumber(p.weights.energy),
                          FormatNumber(p.mean_objective),
                          FormatNumber(p.mean_latency),
                          FormatNumber(p.mean_energy),
                          FormatNumber(p.mean_all_local_energy)});
  }
  return table;
}

std::vector<MethodSummary> CompareMethods(const ScenarioSpec& spec,
                                          std::span<const int> task_counts,
                                          std::span<const Method> methods,
                                          const SolverConfig& config,
                                          int threads) {
  ValidateScenarioSpec(spec);
  ValidateConfig(config);
  if (methods.empty()) throw ConfigError("compare needs at least one method");
  std::vector<int> counts(task_counts.begin(), task_counts.end());
  if (counts.empty()) counts.push_back(spec.tasks);

  std::vector<MethodSummary> out;
  for (int n : counts) {
    ScenarioSpec per_n = spec;
    per_n.tasks = n;
    ValidateScenarioSpec(per_n);
    const std::size_t k = methods.size();
    std::vector<MethodOutcome> outcomes(static_cast<std::size_t>(spec.trials) * k);
    ForEachTrial(spec.trials, threads, [&](int t) {
      const Scenario scenario = GenerateScenario(per_n, t);
      SolverConfig trial_config = config;
      trial_config.seed = TrialSeed(config.seed, t);
      for (std::size_t i = 0; i < k; ++i) {
        outcomes[t * k + i] = RunMethod(methods[i], scenario, trial_config, 1);
      }
    });
    for (std::size_t i = 0; i < k; ++i) {
      MethodSummary s;
      s.tasks = n;
      s.method = methods[i];
      for (int t = 0; t < spec.trials; ++t) {
        const MethodOutcome& o = outcomes[t * k + i];
        s.mean_objective += o.evaluation.objective;
        s.mean_work += static_cast<double>(o.work);
        s.mean_wall_ms += o.wall_ms;
      }
      s.mean_objective /= spec.trials;
      s.mean_work /= spec.trials;
      s.mean_wall_ms /= spec.trials;
      out.push_back(s);
    }
  }
  return out;
}

CsvTable CompareTable(std::span<const MethodSummary> rows) {
  CsvTable table;
  table.header = {"tasks", "method", "mean_objective", "mean_work"};
  for (const MethodSummary& s : rows) {
    table.rows.push_back({std::to_string(s.tasks),
                          std::string(MethodName(s.method)),
                          FormatNumber(s.mean_objective),
                          FormatNumber(s.mean_work)});
  }
  return table;
}

CsvTable TraceTable(const SolveResult& result) {
  CsvTable table;
  table.header = {"iter", "batch_min", "batch_mean", "incumbent_best"};
  for (const IterationRecord& r : result.trace) {
    table.rows.push_back({std::to_string(r.iteration), FormatNumber(r.batch_min),
                          FormatNumber(r.batch_mean),
                          FormatNumber(r.incumbent_best)});
  }
  return table;
}

double SpearmanCorrelation(std::span<const double> x,
                           std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const std::vector<double> rx = Ranks(x);
  const std::vector<double> ry = Ranks(y);
  const double mx = Mean(rx);
  const double my = Mean(ry);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace ceoff
