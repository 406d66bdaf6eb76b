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

#include "ceoff/batch_kernels.h"

#include <omp.h>

#include <vector>

namespace ceoff {
namespace {

Sample DrawOne(const ProbabilityIndicator& indicator, const CostTable& table,
               std::uint64_t seed, int iteration, int index) {
  SplitMix64 rng = SampleStream(seed, iteration, index);
  Sample s;
  s.choices = DrawChoices(indicator, rng);
  s.objective = EvaluateChoices(table, s.choices).objective;
  return s;
}

}  // namespace

SampleBatch DrawBatchSerial(const ProbabilityIndicator& indicator,
                            const CostTable& table, int samples,
                            std::uint64_t seed, int iteration) {
  SampleBatch batch;
  batch.processors = indicator.processors();
  batch.samples.reserve(samples);
  for (int s = 0; s < samples; ++s) {
    batch.samples.push_back(DrawOne(indicator, table, seed, iteration, s));
  }
  return batch;
}

SampleBatch DrawBatch(const ProbabilityIndicator& indicator,
                      const CostTable& table, int samples, std::uint64_t seed,
                      int iteration, int threads) {
  SampleBatch batch;
  batch.processors = indicator.processors();
  batch.samples.resize(samples);
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(team)
  for (int s = 0; s < samples; ++s) {
    batch.samples[s] = DrawOne(indicator, table, seed, iteration, s);
  }
  return batch;
}

}  // namespace ceoff
