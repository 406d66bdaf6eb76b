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

// Shared fixtures: the worked single-task instance and random scenarios for
// property tests.

#ifndef CEOFF_TESTS_TEST_SUPPORT_H_
#define CEOFF_TESTS_TEST_SUPPORT_H_

#include <cstdint>

#include "ceoff/model.h"
#include "ceoff/rng.h"

namespace ceoff::testing {

// Local CPU at 200 Mcycles/s plus `caps` access points at 2.0, 2.2, 2.4, ...
// Gcycles/s, 10 Mbit/s links, powers 0.8 / 1.258 / 1.181 W, weights 0.5 / 0.5.
Scenario ReferenceScenario(int caps);

// Task with 4 Mbit in, 2 Mbit out, 400 Mcycles: on access point 1 it takes
// 0.4 s up, 0.2 s down and 0.2 s of compute.
Task WorkedTask();

// Random scenario with N tasks and M access points. Processor speeds, link
// rates, powers and weights are drawn as well as tasks.
Scenario RandomScenario(SplitMix64& rng, int tasks, int caps);

}  // namespace ceoff::testing

#endif  // CEOFF_TESTS_TEST_SUPPORT_H_
