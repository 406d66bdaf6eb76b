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

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "ceoff/errors.h"
#include "ceoff/model.h"
#include "ceoff/oracles.h"

namespace ceoff {
namespace {

SolverConfig FixedBudget(int samples, int elites, int iterations) {
  SolverConfig c;
  c.samples = samples;
  c.elites = elites;
  c.iterations = iterations;
  c.early_stop_tolerance = std::nullopt;
  return c;
}

TEST(ScenarioSpecTest, DefaultProcessorsMatchTheReferenceConstants) {
  const Scenario s = GenerateScenario(ScenarioSpec{}, 0);
  ASSERT_EQ(s.num_processors(), 4);
  EXPECT_EQ(s.processors[0].rate_cps, 2e8);
  EXPECT_FALSE(s.processors[0].uplink_bps.has_value());
  EXPECT_EQ(s.processors[1].rate_cps, 2e9);
  EXPECT_EQ(s.processors[2].rate_cps, 2.2e9);
  EXPECT_EQ(s.processors[3].rate_cps, 2.4e9);
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(s.processors[m].index, m);
    EXPECT_EQ(*s.processors[m].uplink_bps, 1e7);
    EXPECT_EQ(*s.processors[m].downlink_bps, 1e7);
  }
  EXPECT_EQ(s.power.local_w, 0.8);
  EXPECT_EQ(s.power.tx_w, 1.258);
  EXPECT_EQ(s.power.rx_w, 1.181);
  EXPECT_EQ(s.num_tasks(), 6);
}

TEST(ScenarioSpecTest, GenerationIsDeterministicAndInRange) {
  ScenarioSpec spec;
  spec.seed = 99;
  for (int trial = 0; trial < 10000; ++trial) {
    const Scenario s = GenerateScenario(spec, trial);
    for (const Task& t : s.tasks) {
      ASSERT_GE(t.input_bits, spec.input_bits.lo);
      ASSERT_LE(t.input_bits, spec.input_bits.hi);
      ASSERT_GE(t.output_bits, spec.output_bits.lo);
      ASSERT_LE(t.output_bits, spec.output_bits.hi);
      ASSERT_GE(t.cycles, spec.cycles.lo);
      ASSERT_LE(t.cycles, spec.cycles.hi);
    }
  }
  const Scenario a = GenerateScenario(spec, 17);
  const Scenario b = GenerateScenario(spec, 17);
  const Scenario c = GenerateScenario(spec, 18);
  EXPECT_EQ(a.tasks[3].cycles, b.tasks[3].cycles);
  EXPECT_NE(a.tasks[3].cycles, c.tasks[3].cycles);
}

TEST(ScenarioSpecTest, TaskDrawsDoNotDependOnTheNumberOfAccessPoints) {
  ScenarioSpec one;
  one.caps = 1;
  ScenarioSpec three;
  const Scenario a = GenerateScenario(one, 5);
  const Scenario b = GenerateScenario(three, 5);
  for (int n = 0; n < a.num_tasks(); ++n) {
    EXPECT_EQ(a.tasks[n].input_bits, b.tasks[n].input_bits);
    EXPECT_EQ(a.tasks[n].cycles, b.tasks[n].cycles);
  }
}

TEST(ScenarioSpecTest, InvalidSpecsAreConfigErrors) {
  ScenarioSpec spec;
  spec.cycles = {2e9, 1e9};
  EXPECT_THROW(ValidateScenarioSpec(spec), ConfigError);
  spec = ScenarioSpec{};
  spec.caps = 4;
  EXPECT_THROW(ValidateScenarioSpec(spec), ConfigError);
  spec = ScenarioSpec{};
  spec.trials = 0;
  EXPECT_THROW(ValidateScenarioSpec(spec), ConfigError);
  spec = ScenarioSpec{};
  spec.input_bits = {-1.0, 2.0};
  EXPECT_THROW(ValidateScenarioSpec(spec), ConfigError);
}

TEST(TrialSeedTest, DistinctPerTrial) {
  std::set<std::uint64_t> seen;
  for (int t = 0; t < 1000; ++t) seen.insert(TrialSeed(1, t));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(TrialSeed(1, 3), TrialSeed(1, 3));
}

TEST(MethodTest, NamesRoundTrip) {
  for (Method m : {Method::kAsce, Method::kBnb, Method::kExhaustive, Method::kLpr,
                   Method::kNoMec, Method::kFullMec}) {
    EXPECT_EQ(ParseMethod(MethodName(m)), m);
  }
  EXPECT_THROW(ParseMethod("simulated-annealing"), ConfigError);
}

TEST(MethodTest, OutcomesReevaluateThroughTheModel) {
  ScenarioSpec spec;
  const SolverConfig config = FixedBudget(100, 10, 12);
  const Scenario s = GenerateScenario(spec, 2);
  for (Method m : {Method::kAsce, Method::kBnb, Method::kExhaustive, Method::kLpr,
                   Method::kNoMec, Method::kFullMec}) {
    const MethodOutcome o = RunMethod(m, s, config);
    const Evaluation e = Evaluate(o.assignment, s);
    EXPECT_EQ(o.evaluation.objective, e.objective) << MethodName(m);
    EXPECT_EQ(o.evaluation.latency, e.latency);
    EXPECT_EQ(o.evaluation.energy, e.energy);
  }
  EXPECT_EQ(RunMethod(Method::kAsce, s, config).work, 100 * 12);
  EXPECT_EQ(RunMethod(Method::kFullMec, s, config).assignment.Choices(),
            std::vector<int>(6, 1));
}

TEST(LambdaGridTest, TwentyPointsFromMinusOnePointEightToTwo) {
  const std::vector<double> grid = LambdaExponentGrid();
  ASSERT_EQ(grid.size(), 20u);
  EXPECT_DOUBLE_EQ(grid.front(), -1.8);
  EXPECT_DOUBLE_EQ(grid.back(), 2.0);
  EXPECT_EQ(grid[9], 0.0);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    EXPECT_NEAR(grid[k] - grid[k - 1], 0.2, 1e-12);
  }
}

TEST(LambdaGridTest, WeightsAreNormalized) {
  const Weights even = WeightsForExponent(0.0);
  EXPECT_EQ(even.latency, 0.5);
  EXPECT_EQ(even.energy, 0.5);
  for (double q : LambdaExponentGrid()) {
    const Weights w = WeightsForExponent(q);
    EXPECT_NEAR(w.latency + w.energy, 1.0, 1e-15);
    EXPECT_NEAR(w.energy / w.latency, std::pow(10.0, q), 1e-9 * std::pow(10.0, q));
  }
  EXPECT_NEAR(WeightsForExponent(1.0).latency, 1.0 / 11.0, 1e-15);
}

TEST(SpearmanTest, KnownValues) {
  const std::vector<double> x{1, 2, 3, 4, 5};
  const std::vector<double> up{2, 4, 8, 16, 32};
  const std::vector<double> down{5, 4, 3, 2, 1};
  EXPECT_DOUBLE_EQ(SpearmanCorrelation(x, up), 1.0);
  EXPECT_DOUBLE_EQ(SpearmanCorrelation(x, down), -1.0);
  const std::vector<double> a{1, 2, 3, 4};
  const std::vector<double> ties{1, 1, 2, 3};
  EXPECT_NEAR(SpearmanCorrelation(a, ties), 3.0 / std::sqrt(10.0), 1e-12);
  const std::vector<double> flat{7, 7, 7, 7};
  EXPECT_TRUE(std::isnan(SpearmanCorrelation(a, flat)));
  EXPECT_TRUE(std::isnan(SpearmanCorrelation(a, x)));
}

TEST(ConvergenceTest, TracesAreNonincreasingAndFullLength) {
  ScenarioSpec spec;
  spec.trials = 10;
  const std::vector<std::pair<int, int>> configs{{50, 5}, {100, 10}};
  SolverConfig base = FixedBudget(1, 1, 15);
  base.early_stop_tolerance = 1.0;  // overridden by the sweep
  const auto series = RunConvergence(spec, base, configs);
  ASSERT_EQ(series.size(), 2u);
  for (const ConvergenceSeries& s : series) {
    ASSERT_EQ(s.incumbent_best.size(), 15u);
    for (std::size_t t = 1; t < s.incumbent_best.size(); ++t) {
      EXPECT_LE(s.incumbent_best[t], s.incumbent_best[t - 1]);
      EXPECT_LE(s.incumbent_best[t], s.batch_min[t]);
    }
  }
  const CsvTable table = ConvergenceTable(series);
  EXPECT_EQ(table.header, (std::vector<std::string>{"samples", "elites", "iter",
                                                    "incumbent_best", "batch_min",
                                                    "batch_mean"}));
  EXPECT_EQ(table.rows.size(), 30u);
}

TEST(ConvergenceTest, MoreElitesDoNotHurtOnAverage) {
  ScenarioSpec spec;
  spec.tasks = 8;
  spec.trials = 50;
  const std::vector<std::pair<int, int>> configs{{200, 10}, {200, 40}};
  const auto series = RunConvergence(spec, FixedBudget(1, 1, 30), configs);
  const double few = series[0].incumbent_best.back();
  const double many = series[1].incumbent_best.back();
  EXPECT_LE(many, few * 1.01);
  EXPECT_NEAR(many, few, 0.05 * std::min(many, few));
}

TEST(SizeSweepTest, OrderingAcrossMethods) {
  ScenarioSpec spec;
  spec.trials = 50;
  const std::vector<double> scales{0.5, 1.0, 2.0};
  const std::vector<Method> methods{Method::kAsce, Method::kBnb, Method::kLpr};
  const auto points = RunSizeSweep(spec, scales, methods, SolverConfig{});
  ASSERT_EQ(points.size(), 9u);
  for (std::size_t i = 0; i < points.size(); i += 3) {
    const SizePoint& asce = points[i];
    const SizePoint& bnb = points[i + 1];
    const SizePoint& lpr = points[i + 2];
    EXPECT_EQ(asce.method, Method::kAsce);
    EXPECT_EQ(asce.scale, bnb.scale);
    EXPECT_LE(asce.mean_objective, lpr.mean_objective) << "scale " << asce.scale;
    EXPECT_GE(asce.mean_objective, bnb.mean_objective);
    EXPECT_LE(asce.mean_objective, 1.02 * bnb.mean_objective);
  }
  EXPECT_EQ(SizeTable(points).header,
            (std::vector<std::string>{"scale", "method", "mean_objective",
                                      "mean_latency", "mean_energy"}));
}

TEST(SizeSweepTest, NoMecTrailsFullMecForComputeHeavyTasks) {
  ScenarioSpec spec;
  spec.trials = 20;
  spec.cycles = {1e9, 3e9};
  const std::vector<double> scales{1.0};
  const std::vector<Method> methods{Method::kNoMec, Method::kFullMec};
  const auto points = RunSizeSweep(spec, scales, methods, SolverConfig{});
  EXPECT_GE(points[0].mean_objective, points[1].mean_objective);
}

TEST(LambdaSweepTest, ShapeAndAllLocalReference) {
  ScenarioSpec spec;
  spec.trials = 4;
  const std::vector<int> caps{1, 2};
  const auto points = RunLambdaSweep(spec, caps, FixedBudget(60, 6, 10));
  ASSERT_EQ(points.size(), 40u);
  for (const LambdaPoint& p : points) {
    EXPECT_NEAR(p.weights.latency + p.weights.energy, 1.0, 1e-15);
    EXPECT_NEAR(p.mean_objective,
                p.weights.latency * p.mean_latency + p.weights.energy * p.mean_energy,
                1e-9 * p.mean_objective);
  }
  // The all-local energy does not depend on the weights.
  EXPECT_EQ(points[0].mean_all_local_energy, points[19].mean_all_local_energy);
  EXPECT_EQ(points[0].caps, 1);
  EXPECT_EQ(points[20].caps, 2);
  EXPECT_EQ(LambdaTable(points).header.size(), 8u);
}

TEST(CompareTest, BnbWorkGrowsSuperlinearlyWhileAsceIsFixed) {
  ScenarioSpec spec;
  spec.trials = 3;
  const std::vector<int> tasks{4, 6, 8, 10};
  const std::vector<Method> methods{Method::kAsce, Method::kBnb};
  const SolverConfig config = FixedBudget(100, 10, 20);
  const auto rows = CompareMethods(spec, tasks, methods, config);
  ASSERT_EQ(rows.size(), 8u);
  double prev_ratio = 0.0;
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    EXPECT_EQ(rows[i].mean_work, 100.0 * 20.0);
    const double ratio = rows[i + 1].mean_work / rows[i + 1].tasks;
    EXPECT_GT(ratio, prev_ratio);
    prev_ratio = ratio;
  }
  EXPECT_GT(rows[7].mean_work, 4.0 * rows[5].mean_work);
  EXPECT_EQ(CompareTable(rows).header,
            (std::vector<std::string>{"tasks", "method", "mean_objective",
                                      "mean_work"}));
}

TEST(ReproducibilityTest, TablesAreIdenticalAcrossRunsAndThreadCounts) {
  ScenarioSpec spec;
  spec.trials = 6;
  const SolverConfig config = FixedBudget(50, 5, 8);
  const std::vector<int> caps{2};
  const std::string first = ToCsvString(LambdaTable(RunLambdaSweep(spec, caps, config, 1)));
  const std::string second = ToCsvString(LambdaTable(RunLambdaSweep(spec, caps, config, 0)));
  const std::string third = ToCsvString(LambdaTable(RunLambdaSweep(spec, caps, config, 3)));
  EXPECT_EQ(first, second);
  EXPECT_EQ(first, third);

  const std::vector<Method> methods{Method::kAsce, Method::kLpr};
  const std::vector<int> none;
  EXPECT_EQ(ToCsvString(CompareTable(CompareMethods(spec, none, methods, config, 1))),
            ToCsvString(CompareTable(CompareMethods(spec, none, methods, config, 2))));
}

TEST(TraceTableTest, OneRowPerIteration) {
  const Scenario s = GenerateScenario(ScenarioSpec{}, 0);
  const SolveResult r = Solve(s, FixedBudget(40, 4, 7));
  const CsvTable t = TraceTable(r);
  EXPECT_EQ(t.header, (std::vector<std::string>{"iter", "batch_min", "batch_mean",
                                                "incumbent_best"}));
  ASSERT_EQ(t.rows.size(), 7u);
  EXPECT_EQ(t.rows[0][0], "0");
  EXPECT_EQ(t.rows[6][3], FormatNumber(r.best_objective));
}

}  // namespace
}  // namespace ceoff
