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

#include "test_support.h"

namespace ceoff::testing {

Scenario ReferenceScenario(int caps) {
  Scenario s;
  s.processors.push_back({0, 200e6, std::nullopt, std::nullopt});
  for (int m = 1; m <= caps; ++m) {
    s.processors.push_back({m, 2.0e9 + 0.2e9 * (m - 1), 10e6, 10e6});
  }
  s.power = {0.8, 1.258, 1.181};
  s.weights = {0.5, 0.5};
  return s;
}

Task WorkedTask() { return {4e6, 2e6, 4e8}; }

Scenario RandomScenario(SplitMix64& rng, int tasks, int caps) {
  auto draw = [&](double lo, double hi) { return lo + (hi - lo) * Uniform01(rng); };
  Scenario s;
  for (int n = 0; n < tasks; ++n) {
    s.tasks.push_back({draw(1e6, 8e6), draw(0.5e6, 4e6), draw(0.1e9, 1.5e9)});
  }
  s.processors.push_back({0, draw(100e6, 400e6), std::nullopt, std::nullopt});
  for (int m = 1; m <= caps; ++m) {
    s.processors.push_back(
        {m, draw(1e9, 3e9), draw(5e6, 20e6), draw(5e6, 20e6)});
  }
  s.power = {draw(0.5, 1.0), draw(1.0, 1.5), draw(1.0, 1.5)};
  const double w = draw(0.05, 0.95);
  s.weights = {w, 1.0 - w};
  return s;
}

}  // namespace ceoff::testing
