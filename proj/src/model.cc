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

#include "ceoff/model.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "ceoff/errors.h"

namespace ceoff {
namespace {

bool PositiveFinite(double v) { return std::isfinite(v) && v > 0.0; }

void RequirePositive(double v, const std::string& what) {
  if (!PositiveFinite(v)) {
    throw DomainError(what + " must be positive and finite");
  }
}

// Throws FeasibilityError carrying the validation report.
std::vector<int> FeasibleChoices(const Assignment& assignment,
                                 const Scenario& scenario) {
  ValidationReport report = Validate(assignment, scenario);
  if (!report.ok()) throw FeasibilityError(report.ToString());
  return assignment.Choices();
}

CostAccumulator Accumulate(const Assignment& assignment,
                           const Scenario& scenario, const CostTable& table) {
  std::vector<int> choices = FeasibleChoices(assignment, scenario);
  CostAccumulator acc(table);
  for (int n = 0; n < table.tasks(); ++n) acc.Add(n, choices[n]);
  return acc;
}

}  // namespace

void ValidateTask(const Task& task) {
  RequirePositive(task.input_bits, "task input_bits");
  RequirePositive(task.output_bits, "task output_bits");
  RequirePositive(task.cycles, "task cycles");
}

void ValidateProcessor(const Processor& proc) {
  const std::string name = "processor " + std::to_string(proc.index);
  RequirePositive(proc.rate_cps, name + " rate_cps");
  if (proc.is_local()) {
    if (proc.uplink_bps || proc.downlink_bps) {
      throw DomainError(name + " is the local CPU; its link rates must be "
                               "the infinite sentinel (null)");
    }
    return;
  }
  if (!proc.uplink_bps || !proc.downlink_bps) {
    throw DomainError(name + " needs finite uplink and downlink rates");
  }
  RequirePositive(*proc.uplink_bps, name + " uplink_bps");
  RequirePositive(*proc.downlink_bps, name + " downlink_bps");
}

void ValidateWeights(const Weights& weights) {
  if (!std::isfinite(weights.latency) || !std::isfinite(weights.energy) ||
      weights.latency < 0.0 || weights.energy < 0.0 ||
      weights.latency + weights.energy <= 0.0) {
    throw DomainError(
        "weights must be finite, nonnegative and not both zero");
  }
}

void ValidateScenario(const Scenario& scenario) {
  if (scenario.tasks.empty()) throw DomainError("scenario has no tasks");
  if (scenario.processors.empty()) {
    throw DomainError("scenario has no processors");
  }
  for (const Task& task : scenario.tasks) ValidateTask(task);
  for (int m = 0; m < scenario.num_processors(); ++m) {
    if (scenario.processors[m].index != m) {
      throw DomainError("processor indices must be contiguous from 0; "
                        "position " + std::to_string(m) + " has index " +
                        std::to_string(scenario.processors[m].index));
    }
    ValidateProcessor(scenario.processors[m]);
  }
  RequirePositive(scenario.power.local_w, "power p0_w");
  RequirePositive(scenario.power.tx_w, "power pt_w");
  RequirePositive(scenario.power.rx_w, "power pr_w");
  ValidateWeights(scenario.weights);
}

Assignment::Assignment(int tasks, int processors)
    : tasks_(tasks),
      processors_(processors),
      cells_(static_cast<std::size_t>(tasks) * processors, 0) {}

Assignment Assignment::FromChoices(std::span<const int> choices,
                                   int processors) {
  Assignment a(static_cast<int>(choices.size()), processors);
  for (std::size_t n = 0; n < choices.size(); ++n) {
    if (choices[n] < 0 || choices[n] >= processors) {
      throw FeasibilityError("task " + std::to_string(n) +
                             " names processor " + std::to_string(choices[n]) +
                             " outside 0.." + std::to_string(processors - 1));
    }
    a.set(static_cast<int>(n), choices[n], true);
  }
  return a;
}

int Assignment::RowSum(int task) const {
  int sum = 0;
  for (int m = 0; m < processors_; ++m) sum += cells_[Offset(task, m)];
  return sum;
}

std::vector<int> Assignment::Choices() const {
  std::vector<int> choices(tasks_, -1);
  for (int n = 0; n < tasks_; ++n) {
    if (RowSum(n) != 1) {
      throw FeasibilityError("task " + std::to_string(n) + " row sums to " +
                             std::to_string(RowSum(n)) + ", expected 1");
    }
    for (int m = 0; m < processors_; ++m) {
      if (at(n, m)) choices[n] = m;
    }
  }
  return choices;
}

std::string ValidationReport::ToString() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i > 0) os << "; ";
    os << violations[i].message;
  }
  return os.str();
}

ValidationReport Validate(const Assignment& assignment,
                          const Scenario& scenario) {
  ValidationReport report;
  if (assignment.tasks() != scenario.num_tasks() ||
      assignment.processors() != scenario.num_processors()) {
    std::ostringstream os;
    os << "assignment is " << assignment.tasks() << "x"
       << assignment.processors() << " but scenario needs "
       << scenario.num_tasks() << "x" << scenario.num_processors();
    report.violations.push_back({Violation::Kind::kShape, -1, os.str()});
    return report;
  }
  for (int n = 0; n < assignment.tasks(); ++n) {
    int sum = assignment.RowSum(n);
    if (sum != 1) {
      report.violations.push_back(
          {Violation::Kind::kRowSum, n,
           "task " + std::to_string(n) + " row sums to " +
               std::to_string(sum) + ", expected 1"});
    }
  }
  return report;
}

double LinkRate(const LinkChannel& channel, double device_power_w) {
  RequirePositive(channel.channel_gain, "channel gain");
  RequirePositive(channel.noise_power_w, "noise power");
  RequirePositive(device_power_w, "device power");
  return std::log2(1.0 + device_power_w * channel.channel_gain /
                             channel.noise_power_w);
}

TaskTimes ComputeTaskTimes(const Task& task, const Processor& proc) {
  TaskTimes t;
  t.compute = task.cycles / proc.rate_cps;
  if (!proc.is_local()) {
    t.uplink = task.input_bits / *proc.uplink_bps;
    t.downlink = task.output_bits / *proc.downlink_bps;
  }
  return t;
}

CostTable::CostTable(const Scenario& scenario)
    : tasks_(scenario.num_tasks()),
      processors_(scenario.num_processors()),
      power_(scenario.power),
      weights_(scenario.weights) {
  times_.reserve(static_cast<std::size_t>(tasks_) * processors_);
  busy_.reserve(times_.capacity());
  for (const Task& task : scenario.tasks) {
    for (const Processor& proc : scenario.processors) {
      TaskTimes t = ComputeTaskTimes(task, proc);
      times_.push_back(t);
      busy_.push_back(t.total());
    }
  }
}

CostAccumulator::CostAccumulator(const CostTable& table)
    : table_(&table), cap_latency_(table.processors(), 0.0) {}

void CostAccumulator::Add(int task, int processor) {
  const TaskTimes& t = table_->times(task, processor);
  cap_latency_[processor] += table_->busy(task, processor);
  if (processor == 0) {
    local_compute_s_ += t.compute;
  } else {
    uplink_s_ += t.uplink;
    downlink_s_ += t.downlink;
  }
}

double CostAccumulator::latency() const {
  return *std::max_element(cap_latency_.begin(), cap_latency_.end());
}

double CostAccumulator::local_energy() const {
  return table_->power().local_w * local_compute_s_;
}

double CostAccumulator::offload_energy() const {
  return table_->power().tx_w * uplink_s_ + table_->power().rx_w * downlink_s_;
}

double CostAccumulator::objective() const {
  const Weights& w = table_->weights();
  return w.latency * latency() + w.energy * energy();
}

Evaluation EvaluateChoices(const CostTable& table,
                           std::span<const int> choices) {
  CostAccumulator acc(table);
  for (int n = 0; n < table.tasks(); ++n) acc.Add(n, choices[n]);
  return {acc.latency(), acc.energy(), acc.objective()};
}

double CapLatency(const Assignment& assignment, const Scenario& scenario,
                  int processor) {
  if (processor < 0 || processor >= scenario.num_processors()) {
    throw DomainError("processor index " + std::to_string(processor) +
                      " out of range");
  }
  CostTable table(scenario);
  return Accumulate(assignment, scenario, table).cap_latency(processor);
}

double OverallLatency(const Assignment& assignment, const Scenario& scenario) {
  CostTable table(scenario);
  return Accumulate(assignment, scenario, table).latency();
}

double LocalEnergy(const Assignment& assignment, const Scenario& scenario) {
  CostTable table(scenario);
  return Accumulate(assignment, scenario, table).local_energy();
}

double OffloadEnergy(const Assignment& assignment, const Scenario& scenario) {
  CostTable table(scenario);
  return Accumulate(assignment, scenario, table).offload_energy();
}

double TotalEnergy(const Assignment& assignment, const Scenario& scenario) {
  CostTable table(scenario);
  return Accumulate(assignment, scenario, table).energy();
}

double WeightedObjective(const Assignment& assignment,
                         const Scenario& scenario) {
  CostTable table(scenario);
  return Accumulate(assignment, scenario, table).objective();
}

Evaluation Evaluate(const Assignment& assignment, const Scenario& scenario) {
  CostTable table(scenario);
  CostAccumulator acc = Accumulate(assignment, scenario, table);
  return {acc.latency(), acc.energy(), acc.objective()};
}

}  // namespace ceoff
