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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ceoff/ce_solver.h"
#include "ceoff/harness.h"
#include "ceoff/model.h"
#include "ceoff/oracles.h"
#include "ceoff/rng.h"
#include "test_support.h"

namespace ceoff {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Verdict OracleEquivalence() {
  const auto start = Clock::now();
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    SplitMix64 rng = Substream(2024, {static_cast<std::uint64_t>(i)});
    const int tasks = 1 + static_cast<int>(UniformIndex(rng, 6));
    const int caps = 1 + static_cast<int>(UniformIndex(rng, 2));
    const Scenario s = testing::RandomScenario(rng, tasks, caps);
    const OracleResult exact = ExhaustiveSolve(s);
    const OracleResult bnb = BnbSolve(s);
    if (WeightedObjective(bnb.assignment, s) != exact.objective ||
        bnb.objective != exact.objective) {
      ++mismatches;
    }
  }
  const double secs = Seconds(start);
  return {mismatches == 0 && secs < 10.0,
          Fmt("%d/200 mismatches, %.2f s", mismatches, secs)};
}

struct PairedRun {
  int matches = 0;
  double mean_gap = 0.0;
  double asce_mean = 0.0;
  double lpr_mean = 0.0;
  double seconds = 0.0;
};

PairedRun RunPaired() {
  const auto start = Clock::now();
  ScenarioSpec spec;
  spec.tasks = 6;
  spec.caps = 2;
  spec.trials = 100;
  SolverConfig config;
  config.samples = 200;
  config.elites = 20;
  config.learning_rate = 0.8;
  config.iterations = 30;
  PairedRun out;
  for (int t = 0; t < spec.trials; ++t) {
    const Scenario s = GenerateScenario(spec, t);
    config.seed = TrialSeed(spec.seed, t);
    const double exact = ExhaustiveSolve(s).objective;
    const double asce = Solve(s, config).best_objective;
    const double lpr = LprSolve(s).objective;
    const double gap = (asce - exact) / exact;
    out.matches += gap <= 1e-12;
    out.mean_gap += gap / spec.trials;
    out.asce_mean += asce / spec.trials;
    out.lpr_mean += lpr / spec.trials;
  }
  out.seconds = Seconds(start);
  return out;
}

Verdict Feasibility() {
  int violations = 0;
  SplitMix64 rng(31337);
  for (int i = 0; i < 10000; ++i) {
    const int tasks = 1 + static_cast<int>(UniformIndex(rng, 10));
    const int caps = static_cast<int>(UniformIndex(rng, 4));
    ProbabilityIndicator u(tasks, caps + 1, 0.0);
    for (int m = 0; m <= caps; ++m) {
      for (int n = 0; n < tasks; ++n) {
        const std::uint64_t kind = UniformIndex(rng, 4);
        u.set(n, m, kind == 0 ? 0.0 : kind == 1 ? 1.0 : Uniform01(rng));
      }
    }
    const Assignment a = DrawSample(u, rng);
    for (int n = 0; n < tasks; ++n) violations += a.RowSum(n) != 1;
  }
  int out_of_range = 0;
  int increases = 0;
  int iterations = 0;
  for (int run = 0; run < 20; ++run) {
    SplitMix64 srng(500 + run);
    const Scenario s = testing::RandomScenario(srng, 8, 3);
    SolverConfig config;
    config.samples = 60;
    config.elites = 6;
    config.iterations = 50;
    config.seed = run;
    config.early_stop_tolerance = std::nullopt;
    const SolveResult r = Solve(s, config);
    for (std::size_t t = 0; t < r.trace.size(); ++t) {
      ++iterations;
      for (double p : r.trace[t].indicator.values()) out_of_range += !(p >= 0.0 && p <= 1.0);
      if (t > 0 && r.trace[t].incumbent_best > r.trace[t - 1].incumbent_best) ++increases;
    }
  }
  return {violations == 0 && out_of_range == 0 && increases == 0 && iterations >= 1000,
          Fmt("%d row violations in 10000 samples, %d indicator entries outside "
              "[0,1] and %d incumbent increases over %d iterations",
              violations, out_of_range, increases, iterations)};
}

Verdict HyperparameterRobustness() {
  ScenarioSpec spec;
  spec.tasks = 8;
  spec.caps = 3;
  spec.trials = 50;
  SolverConfig base;
  base.iterations = 30;
  const std::vector<std::pair<int, int>> configs{{100, 10}, {200, 20}, {400, 40}};
  const auto series = RunConvergence(spec, base, configs);
  double lo = INFINITY;
  double hi = 0.0;
  std::string finals;
  for (const ConvergenceSeries& s : series) {
    lo = std::min(lo, s.incumbent_best.back());
    hi = std::max(hi, s.incumbent_best.back());
    finals += Fmt(" %.4f", s.incumbent_best.back());
  }
  const double spread = (hi - lo) / lo;
  return {spread <= 0.05, Fmt("finals%s, spread %.3f%%", finals.c_str(), 100 * spread)};
}

Verdict LambdaTrends() {
  // Compute-light tasks, where running everything locally is the
  // energy-minimal placement.
  ScenarioSpec spec;
  spec.cycles = {5e7, 2e8};
  spec.trials = 50;
  const std::vector<int> caps{1, 2, 3};
  const auto points = RunLambdaSweep(spec, caps, SolverConfig{});
  bool pass = true;
  std::string detail;
  for (int m : {2, 3}) {
    std::vector<double> q;
    std::vector<double> psi;
    for (const LambdaPoint& p : points) {
      if (p.caps == m && p.q >= -1e-12) {
        q.push_back(p.q);
        psi.push_back(p.mean_objective);
      }
    }
    const double rho = SpearmanCorrelation(q, psi);
    pass = pass && rho > 0.0;
    detail += Fmt("M=%d spearman %.3f; ", m, rho);
  }
  for (const LambdaPoint& p : points) {
    if (p.caps == 1 && std::abs(p.q - 2.0) < 1e-12) {
      const double target = p.weights.energy * p.mean_all_local_energy;
      const double rel = std::abs(p.mean_objective - target) / target;
      pass = pass && rel <= 0.10;
      detail += Fmt("M=1 q=2 psi %.4f vs %.4f (%.2f%%)", p.mean_objective, target,
                    100 * rel);
    }
  }
  return {pass, detail};
}

Verdict Complexity() {
  ScenarioSpec spec;
  spec.caps = 3;
  const SolverConfig config;
  const double asce_samples = static_cast<double>(config.samples) * config.iterations;
  std::vector<std::int64_t> nodes;
  for (int n : {6, 8, 10}) {
    spec.tasks = n;
    nodes.push_back(BnbSolve(GenerateScenario(spec, 0)).work);
  }
  const bool monotone = nodes[0] < nodes[1] && nodes[1] < nodes[2];
  return {monotone && nodes[2] >= 2.0 * asce_samples,
          Fmt("BnB nodes %lld / %lld / %lld at N=6/8/10, ASCE samples %.0f",
              static_cast<long long>(nodes[0]), static_cast<long long>(nodes[1]),
              static_cast<long long>(nodes[2]), asce_samples)};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs every CLI command into `dir` and returns stdout and file contents.
std::vector<std::pair<std::string, std::string>> CliSnapshot(const fs::path& dir) {
  fs::remove_all(dir / "run");
  fs::create_directories(dir / "run");
  const std::string cli = CEOFF_CLI_PATH;
  const std::string d = (dir / "run").string();
  const std::string spec = (dir / "spec.json").string();
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gen", "gen-scenario --spec " + spec + " --seed 4 --out " + d + "/scenario.json"},
      {"solve", "solve --scenario " + d + "/scenario.json --trace " + d +
                    "/trace.csv --seed 9"},
      {"solve_bnb", "solve --scenario " + d + "/scenario.json --method bnb"},
      {"sweep_conv", "sweep --spec " + spec + " --kind convergence --out " + d +
                         " --tag det"},
      {"sweep_size", "sweep --spec " + spec + " --kind size --out " + d + " --tag det"},
      {"sweep_lambda", "sweep --spec " + spec + " --kind lambda --out " + d +
                           " --tag det --seed 12"},
      {"compare", "compare --spec " + spec + " --out " + d + " --tag det"},
  };
  std::vector<std::pair<std::string, std::string>> snapshot;
  for (const auto& [name, args] : commands) {
    const std::string stdout_path = (dir / (name + ".stdout")).string();
    const int rc = std::system((cli + " " + args + " > " + stdout_path +
                                " 2> /dev/null").c_str());
    snapshot.emplace_back(name + " exit", std::to_string(rc));
    snapshot.emplace_back(name + " stdout", Slurp(stdout_path));
  }
  for (const auto& entry : fs::directory_iterator(dir / "run")) {
    snapshot.emplace_back(entry.path().filename().string(), Slurp(entry.path()));
  }
  std::sort(snapshot.begin(), snapshot.end());
  return snapshot;
}

Verdict Determinism() {
  const fs::path dir = fs::temp_directory_path() / "ceoff_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "spec.json") << R"({
  "scenario": {"tasks": 5, "caps": 2, "trials": 4, "seed": 3},
  "solver": {"samples": 60, "elites": 6, "iterations": 10},
  "convergence": {"configs": [{"samples": 40, "elites": 4}, {"samples": 80, "elites": 8}]},
  "size": {"scales": [0.5, 1.0], "methods": ["asce", "bnb", "lpr", "nomec", "fullmec"]},
  "lambda": {"caps": [1, 2]},
  "compare": {"tasks": [4, 5], "methods": ["asce", "bnb", "lpr"]}
})";
  const auto first = CliSnapshot(dir);
  const auto second = CliSnapshot(dir);
  int differences = 0;
  int failures = 0;
  for (std::size_t i = 0; i < std::min(first.size(), second.size()); ++i) {
    differences += first[i] != second[i];
    if (first[i].first.ends_with(" exit")) failures += first[i].second != "0";
  }
  const bool pass = first.size() == second.size() && differences == 0 && failures == 0;
  return {pass, Fmt("%zu artifacts compared, %d differ, %d commands failed",
                    first.size(), differences, failures)};
}

Verdict WorkedValues() {
  Scenario s = testing::ReferenceScenario(1);
  s.tasks = {testing::WorkedTask()};
  const std::vector<int> choices{1};
  const Assignment a = Assignment::FromChoices(choices, 2);
  const Evaluation e = Evaluate(a, s);
  const bool pass = std::abs(e.latency - 0.8) <= 1e-9 &&
                    std::abs(e.energy - 0.7394) <= 1e-9 &&
                    std::abs(e.objective - 0.7697) <= 1e-9;
  return {pass, Fmt("T=%.12g E=%.12g psi=%.12g", e.latency, e.energy, e.objective)};
}

}  // namespace
}  // namespace ceoff

int main() {
  using ceoff::Verdict;
  int failed = 0;
  auto report = [&](int id, const char* name, const Verdict& v) {
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name
              << "): " << v.detail << std::endl;
    failed += !v.pass;
  };

  report(1, "BnB equals exhaustive", ceoff::OracleEquivalence());
  const ceoff::PairedRun paired = ceoff::RunPaired();
  report(2, "ASCE near-optimal",
         {paired.matches >= 90 && paired.mean_gap <= 0.02 && paired.seconds < 60.0,
          ceoff::Fmt("%d/100 exact, mean gap %.4f%%, %.2f s", paired.matches,
                     100 * paired.mean_gap, paired.seconds)});
  report(3, "ASCE beats LPr",
         {paired.asce_mean <= paired.lpr_mean,
          ceoff::Fmt("mean psi ASCE %.5f vs LPr %.5f", paired.asce_mean,
                     paired.lpr_mean)});
  report(4, "feasibility and bounds", ceoff::Feasibility());
  report(5, "hyperparameter robustness", ceoff::HyperparameterRobustness());
  report(6, "weight-ratio trends", ceoff::LambdaTrends());
  report(7, "complexity direction", ceoff::Complexity());
  report(8, "CLI determinism", ceoff::Determinism());
  report(9, "worked values", ceoff::WorkedValues());

  std::cout << (failed == 0 ? "all criteria passed" : "some criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
