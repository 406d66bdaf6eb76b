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

// Batch sampling kernels. DrawBatch spreads the samples of one iteration over
// OpenMP threads; DrawBatchSerial is the single-threaded reference it must
// match exactly.

#ifndef CEOFF_BATCH_KERNELS_H_
#define CEOFF_BATCH_KERNELS_H_

#include <cstdint>

#include "ceoff/ce_solver.h"
#include "ceoff/model.h"

namespace ceoff {

SampleBatch DrawBatchSerial(const ProbabilityIndicator& indicator,
                            const CostTable& table, int samples,
                            std::uint64_t seed, int iteration);

// threads <= 0 uses the OpenMP default.
SampleBatch DrawBatch(const ProbabilityIndicator& indicator,
                      const CostTable& table, int samples, std::uint64_t seed,
                      int iteration, int threads = 0);

}  // namespace ceoff

#endif  // CEOFF_BATCH_KERNELS_H_
