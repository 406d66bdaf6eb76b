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

#include "cli.h"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ceoff/ce_solver.h"
#include "ceoff/csv.h"
#include "ceoff/errors.h"
#include "ceoff/harness.h"
#include "ceoff/json_io.h"
#include "ceoff/model.h"
#include "ceoff/oracles.h"

namespace ceoff::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kThreadsEnv = "CE_OFFLOAD_THREADS";

// 0 means "OpenMP default".
int ThreadsFromEnv() {
  const char* raw = std::getenv(kThreadsEnv);
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096) {
    throw ConfigError(std::string(kThreadsEnv) +
                      " must be a positive integer, got '" + raw + "'");
  }
  return static_cast<int>(v);
}

std::string UtcTimestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y%m%dT%H%M%SZ");
  return os.str();
}

fs::path OutputFile(const std::string& dir, std::string_view kind,
                    const std::string& tag) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
  return fs::path(dir) /
         (std::string(kind) + "_" + (tag.empty() ? UtcTimestamp() : tag) + ".csv");
}

std::string AssignmentLine(const Assignment& a) {
  std::string line;
  const std::vector<int> choices = a.Choices();
  for (std::size_t n = 0; n < choices.size(); ++n) {
    if (n > 0) line += ' ';
    line += std::to_string(n) + "->" + std::to_string(choices[n]);
  }
  return line;
}

// Accepts either a bare scenario spec or a sweep spec with a "scenario" key.
ScenarioSpec LoadScenarioSpec(const std::string& path) {
  Json doc = ReadJsonFile(path);
  if (doc.is_object() && doc.contains("scenario")) {
    return SweepSpecFromJson(doc).scenario;
  }
  return ScenarioSpecFromJson(doc);
}

struct SolveArgs {
  std::string scenario;
  std::string config;
  std::string trace;
  std::string method = "asce";
  std::optional<std::uint64_t> seed;
};

int CmdSolve(const SolveArgs& args, int threads, std::ostream& out) {
  const Scenario scenario = ScenarioFromJson(ReadJsonFile(args.scenario));
  SolverConfig config;
  if (!args.config.empty()) config = SolverConfigFromJson(ReadJsonFile(args.config));
  if (args.seed) config.seed = *args.seed;
  const Method method = ParseMethod(args.method);

  Assignment assignment;
  std::int64_t work = 0;
  if (method == Method::kAsce) {
    SolveResult r = Solve(scenario, config, threads);
    if (!args.trace.empty()) WriteCsv(TraceTable(r), args.trace);
    assignment = std::move(r.best_assignment);
    work = static_cast<std::int64_t>(config.samples) * r.iterations_run;
  } else {
    MethodOutcome o = RunMethod(method, scenario, config, threads);
    assignment = std::move(o.assignment);
    work = o.work;
  }
  const Evaluation e = Evaluate(assignment, scenario);
  out << "method: " << MethodName(method) << '\n'
      << "objective: " << FormatNumber(e.objective) << '\n'
      << "latency: " << FormatNumber(e.latency) << '\n'
      << "energy: " << FormatNumber(e.energy) << '\n'
      << "work: " << work << '\n'
      << "assignment: " << AssignmentLine(assignment) << '\n';
  return kExitOk;
}

struct SweepArgs {
  std::string spec;
  std::string kind;
  std::string out_dir;
  std::string tag;
  std::optional<std::uint64_t> seed;
};

SweepSpec LoadSweepSpec(const std::string& path,
                        const std::optional<std::uint64_t>& seed) {
  SweepSpec spec = SweepSpecFromJson(ReadJsonFile(path));
  if (seed) {
    spec.scenario.seed = *seed;
    spec.solver.seed = *seed;
  }
  return spec;
}

int CmdSweep(const SweepArgs& args, int threads, std::ostream& out) {
  const SweepSpec spec = LoadSweepSpec(args.spec, args.seed);
  if (args.kind != "convergence" && args.kind != "size" && args.kind != "lambda") {
    throw ConfigError("unknown sweep kind '" + args.kind + "'");
  }
  const fs::path path = OutputFile(args.out_dir, args.kind, args.tag);
  CsvTable table;
  if (args.kind == "convergence") {
    table = ConvergenceTable(RunConvergence(spec.scenario, spec.solver,
                                            spec.convergence_configs, threads));
  } else if (args.kind == "size") {
    table = SizeTable(RunSizeSweep(spec.scenario, spec.size_scales,
                                   spec.size_methods, spec.solver, threads));
  } else {
    table = LambdaTable(
        RunLambdaSweep(spec.scenario, spec.lambda_caps, spec.solver, threads));
  }
  WriteCsv(table, path);
  out << "wrote " << path.string() << " (" << table.rows.size() << " rows)\n";
  return kExitOk;
}

struct CompareArgs {
  std::string spec;
  std::string out_dir;
  std::string tag;
  std::optional<std::uint64_t> seed;
};

int CmdCompare(const CompareArgs& args, int threads, std::ostream& out,
               std::ostream& err) {
  const SweepSpec spec = LoadSweepSpec(args.spec, args.seed);
  const fs::path path = OutputFile(args.out_dir, "compare", args.tag);
  const std::vector<MethodSummary> rows =
      CompareMethods(spec.scenario, spec.compare_tasks, spec.compare_methods,
                     spec.solver, threads);
  const CsvTable table = CompareTable(rows);

  std::vector<std::size_t> width(table.header.size());
  for (std::size_t c = 0; c < width.size(); ++c) {
    width[c] = table.header[c].size();
    for (const auto& row : table.rows) width[c] = std::max(width[c], row[c].size());
  }
  auto print_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c == 0 ? "" : "  ") << std::left << std::setw(static_cast<int>(width[c]))
          << row[c];
    }
    out << '\n';
  };
  print_row(table.header);
  for (const auto& row : table.rows) print_row(row);

  // Timing is not reproducible, so it stays out of stdout and the CSV.
  for (const MethodSummary& s : rows) {
    err << "timing: tasks=" << s.tasks << " method=" << MethodName(s.method)
        << " mean_wall_ms=" << s.mean_wall_ms << '\n';
  }
  WriteCsv(table, path);
  out << "wrote " << path.string() << '\n';
  return kExitOk;
}

struct GenArgs {
  std::string spec;
  std::uint64_t seed = 0;
  std::string out_file;
};

int CmdGenScenario(const GenArgs& args, std::ostream& out) {
  ScenarioSpec spec = LoadScenarioSpec(args.spec);
  spec.seed = args.seed;
  WriteJsonFile(ScenarioToJson(GenerateScenario(spec, 0)), args.out_file);
  out << "wrote " << args.out_file << '\n';
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cross-entropy task offloading solver", "ceoff"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one scenario");
  solve_cmd->add_option("--scenario", solve.scenario, "Scenario JSON")->required();
  solve_cmd->add_option("--config", solve.config, "Solver config JSON");
  solve_cmd->add_option("--trace", solve.trace, "Iteration trace CSV (asce only)");
  solve_cmd->add_option("--method", solve.method,
                        "asce|bnb|exhaustive|lpr|nomec|fullmec");
  solve_cmd->add_option("--seed", solve.seed, "Override the solver seed");

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run an experiment sweep");
  sweep_cmd->add_option("--spec", sweep.spec, "Sweep spec JSON")->required();
  sweep_cmd->add_option("--kind", sweep.kind, "convergence|size|lambda")
      ->required()
      ->check(CLI::IsMember({"convergence", "size", "lambda"}));
  sweep_cmd->add_option("--out", sweep.out_dir, "Output directory")->required();
  sweep_cmd->add_option("--tag", sweep.tag, "File name tag (default: timestamp)");
  sweep_cmd->add_option("--seed", sweep.seed, "Override scenario and solver seeds");

  CompareArgs compare;
  CLI::App* compare_cmd = app.add_subcommand("compare", "Compare methods");
  compare_cmd->add_option("--spec", compare.spec, "Sweep spec JSON")->required();
  compare_cmd->add_option("--out", compare.out_dir, "Output directory")->required();
  compare_cmd->add_option("--tag", compare.tag, "File name tag (default: timestamp)");
  compare_cmd->add_option("--seed", compare.seed, "Override scenario and solver seeds");

  GenArgs gen;
  CLI::App* gen_cmd =
      app.add_subcommand("gen-scenario", "Draw a concrete scenario from a spec");
  gen_cmd->add_option("--spec", gen.spec, "Scenario spec JSON")->required();
  gen_cmd->add_option("--seed", gen.seed, "Scenario seed")->required();
  gen_cmd->add_option("--out", gen.out_file, "Output scenario JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    const int threads = ThreadsFromEnv();
    if (threads > 0) omp_set_num_threads(threads);
    if (*solve_cmd) return CmdSolve(solve, threads, out);
    if (*sweep_cmd) return CmdSweep(sweep, threads, out);
    if (*compare_cmd) return CmdCompare(compare, threads, out, err);
    if (*gen_cmd) return CmdGenScenario(gen, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace ceoff::cli
