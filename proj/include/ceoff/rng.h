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

// Deterministic random substreams.
//
// Every random draw in the library comes from a SplitMix64 stream whose
// state is keyed by a path of integers (seed, iteration, sample, ...). A
// sample therefore sees the same numbers no matter which thread draws it or
// in which order, which lets the OpenMP kernels reproduce the serial ones bit
// for bit.

#ifndef CEOFF_RNG_H_
#define CEOFF_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace ceoff {

// Stafford's variant-13 finalizer, as used by SplitMix64.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Satisfies std::uniform_random_bit_generator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() {
    state_ += kGamma;
    return Mix64(state_);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t state_;
};

inline SplitMix64 Substream(std::uint64_t seed,
                            std::initializer_list<std::uint64_t> path) {
  std::uint64_t key = Mix64(seed ^ 0x6a09e667f3bcc909ULL);
  for (std::uint64_t p : path) key = Mix64(key ^ Mix64(p + 0x9e3779b97f4a7c15ULL));
  return SplitMix64(key);
}

// Uniform on [0, 1) with 53 random bits.
inline double Uniform01(SplitMix64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer on [0, bound), bound > 0. Lemire's multiply-shift with
// rejection, so the result does not depend on the standard library.
inline std::uint64_t UniformIndex(SplitMix64& rng, std::uint64_t bound) {
  using u128 = unsigned __int128;
  std::uint64_t x = rng();
  u128 m = static_cast<u128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = rng();
      m = static_cast<u128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace ceoff

#endif  // CEOFF_RNG_H_
