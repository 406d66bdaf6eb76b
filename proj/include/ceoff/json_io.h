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

// JSON documents read and written by the CLI.
//
// Scenario:
//   {"tasks": [{"alpha_bits", "beta_bits", "gamma_cycles"}, ...],
//    "processors": [{"index", "rate_cps", "uplink_bps", "downlink_bps"}, ...],
//    "power": {"p0_w", "pt_w", "pr_w"},
//    "weights": {"lambda_t", "lambda_e"}}
// with null link rates on the local processor (index 0).
//
// Solver config:
//   {"samples", "elites", "learning_rate", "iterations", "seed",
//    "early_stop_tolerance"}  (tolerance may be null)
//
// Scenario spec / sweep spec: see README. Missing optional keys take their
// defaults; unknown keys are rejected.

#ifndef CEOFF_JSON_IO_H_
#define CEOFF_JSON_IO_H_

#include <filesystem>
#include <string>

#include "ceoff/ce_solver.h"
#include "ceoff/harness.h"
#include "ceoff/model.h"
#include "json.hpp"

namespace ceoff {

using Json = nlohmann::ordered_json;

// All *FromJson functions throw ParseError naming the offending key, or the
// domain-specific InputError when the parsed values break an invariant.
Scenario ScenarioFromJson(const Json& doc);
Json ScenarioToJson(const Scenario& scenario);

SolverConfig SolverConfigFromJson(const Json& doc);
Json SolverConfigToJson(const SolverConfig& config);

ScenarioSpec ScenarioSpecFromJson(const Json& doc);
Json ScenarioSpecToJson(const ScenarioSpec& spec);

SweepSpec SweepSpecFromJson(const Json& doc);

// Missing or unparsable input files are input errors (ParseError).
Json ReadJsonFile(const std::filesystem::path& path);
// Pretty-printed with a trailing newline. Throws IoError.
void WriteJsonFile(const Json& doc, const std::filesystem::path& path);

}  // namespace ceoff

#endif  // CEOFF_JSON_IO_H_
