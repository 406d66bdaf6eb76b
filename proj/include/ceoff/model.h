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

// Problem instance and cost model for multi-CAP task offloading.
//
// A mobile device holds N tasks. Each task runs either on the device's own
// CPU (processor 0) or is offloaded to one of M computational access points
// (processors 1..M). Offloading costs an uplink transfer, remote compute and a
// downlink transfer, executed back to back; tasks on one processor are served
// one after another, and the processors run in parallel. The cost of an
// assignment is a weighted sum of the makespan and the device's energy.

#ifndef CEOFF_MODEL_H_
#define CEOFF_MODEL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ceoff {

struct Task {
  double input_bits = 0.0;   // uploaded before remote compute
  double output_bits = 0.0;  // downloaded after remote compute
  double cycles = 0.0;       // CPU cycles needed
};

// Link rates are std::nullopt for the local CPU: transfers to processor 0 are
// infinitely fast and contribute exactly zero time.
struct Processor {
  int index = 0;
  double rate_cps = 0.0;
  std::optional<double> uplink_bps;
  std::optional<double> downlink_bps;

  bool is_local() const { return index == 0; }
};

enum class LinkDirection { kUplink, kDownlink };

struct LinkChannel {
  double channel_gain = 0.0;
  double noise_power_w = 0.0;
  LinkDirection direction = LinkDirection::kUplink;
};

struct PowerProfile {
  double local_w = 0.0;  // device power while computing locally
  double tx_w = 0.0;     // device power while transmitting
  double rx_w = 0.0;     // device power while receiving
};

struct Weights {
  double latency = 0.5;
  double energy = 0.5;
};

struct Scenario {
  std::vector<Task> tasks;
  std::vector<Processor> processors;  // processors[m].index == m
  PowerProfile power;
  Weights weights;

  int num_tasks() const { return static_cast<int>(tasks.size()); }
  int num_processors() const { return static_cast<int>(processors.size()); }
  // M: the number of access points, excluding the local CPU.
  int num_caps() const { return num_processors() - 1; }
};

// Throws DomainError on any invariant violation.
void ValidateTask(const Task& task);
void ValidateProcessor(const Processor& proc);
void ValidateWeights(const Weights& weights);
void ValidateScenario(const Scenario& scenario);

// Binary N x (M+1) offloading matrix; x(n, m) == 1 iff task n runs on m.
class Assignment {
 public:
  Assignment() = default;
  Assignment(int tasks, int processors);

  // One processor index per task.
  static Assignment FromChoices(std::span<const int> choices, int processors);

  int tasks() const { return tasks_; }
  int processors() const { return processors_; }

  bool at(int task, int processor) const {
    return cells_[Offset(task, processor)] != 0;
  }
  void set(int task, int processor, bool value) {
    cells_[Offset(task, processor)] = value ? 1 : 0;
  }
  int RowSum(int task) const;

  // Processor of each task. Throws FeasibilityError if any row does not hold
  // exactly one 1.
  std::vector<int> Choices() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::size_t Offset(int task, int processor) const {
    return static_cast<std::size_t>(task) * processors_ + processor;
  }

  int tasks_ = 0;
  int processors_ = 0;
  std::vector<std::uint8_t> cells_;
};

struct Violation {
  enum class Kind { kShape, kRowSum };
  Kind kind = Kind::kRowSum;
  int task = -1;  // -1 for shape violations
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string ToString() const;
};

// Reports every row whose sum is not 1 and any dimension mismatch.
ValidationReport Validate(const Assignment& assignment,
                          const Scenario& scenario);

// Spectral efficiency log2(1 + P h / N0) in bit/s/Hz. Scale by bandwidth to
// get a rate in bit/s.
double LinkRate(const LinkChannel& channel, double device_power_w);

struct TaskTimes {
  double uplink = 0.0;
  double downlink = 0.0;
  double compute = 0.0;

  double total() const { return uplink + downlink + compute; }
};

TaskTimes ComputeTaskTimes(const Task& task, const Processor& proc);

// Per-(task, processor) times for a scenario, computed once.
class CostTable {
 public:
  explicit CostTable(const Scenario& scenario);

  int tasks() const { return tasks_; }
  int processors() const { return processors_; }
  const TaskTimes& times(int task, int processor) const {
    return times_[static_cast<std::size_t>(task) * processors_ + processor];
  }
  // Busy time that task adds to processor (transfers plus compute).
  double busy(int task, int processor) const {
    return busy_[static_cast<std::size_t>(task) * processors_ + processor];
  }
  const PowerProfile& power() const { return power_; }
  const Weights& weights() const { return weights_; }

 private:
  int tasks_;
  int processors_;
  std::vector<TaskTimes> times_;
  std::vector<double> busy_;
  PowerProfile power_;
  Weights weights_;
};

// Running cost of a (partial) assignment. Every objective value in the
// library is produced by adding tasks to one of these in ascending task
// order, so all solvers agree bit for bit on the value of a given
// assignment. All terms are nonnegative, hence each reported quantity is
// nondecreasing as tasks are added, also under floating-point rounding.
class CostAccumulator {
 public:
  explicit CostAccumulator(const CostTable& table);

  void Add(int task, int processor);

  double cap_latency(int processor) const { return cap_latency_[processor]; }
  double latency() const;
  double local_energy() const;
  double offload_energy() const;
  double energy() const { return local_energy() + offload_energy(); }
  double objective() const;

 private:
  const CostTable* table_;
  std::vector<double> cap_latency_;
  double local_compute_s_ = 0.0;
  double uplink_s_ = 0.0;
  double downlink_s_ = 0.0;
};

struct Evaluation {
  double latency = 0.0;
  double energy = 0.0;
  double objective = 0.0;
};

// Evaluates a choice vector (processor per task) against a precomputed table.
Evaluation EvaluateChoices(const CostTable& table, std::span<const int> choices);

// The functions below validate the assignment first and throw
// FeasibilityError when it is not feasible for the scenario.
double CapLatency(const Assignment& assignment, const Scenario& scenario,
                  int processor);
double OverallLatency(const Assignment& assignment, const Scenario& scenario);
double LocalEnergy(const Assignment& assignment, const Scenario& scenario);
double OffloadEnergy(const Assignment& assignment, const Scenario& scenario);
double TotalEnergy(const Assignment& assignment, const Scenario& scenario);
double WeightedObjective(const Assignment& assignment,
                         const Scenario& scenario);
Evaluation Evaluate(const Assignment& assignment, const Scenario& scenario);

}  // namespace ceoff

#endif  // CEOFF_MODEL_H_
