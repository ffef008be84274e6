// Copyright 2026 The tunopt Authors
//
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

#pragma once

#include <cstdint>
#include <random>

namespace tunopt {

/// One step of the splitmix64 sequence. Used for seed whitening and for
/// deriving independent substreams from (seed, stream id) tuples.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the substream identified by (seed, a, b). Exposed so callers can
/// record the derived value alongside results.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t a,
                                        std::uint64_t b = 0) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  s = h ^ a;
  h = splitmix64(s);
  s = h ^ b;
  return splitmix64(s);
}

/// Deterministic random source. Wraps std::mt19937_64 (whose output sequence
/// is fixed by the standard) and draws bounded integers with a hand-rolled
/// rejection step, so results are identical across platforms and compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    engine_.seed(splitmix64(s));
  }

  /// Substream derived from (seed, a, b); used for per-sample streams so that
  /// parallel benchmark workers are order-independent.
  static Rng stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return Rng(derive_stream_seed(seed, a, b));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound) {
    // Classic unbiased rejection: discard the low-end overhang.
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  bool next_bit() { return (next_u64() >> 63) != 0; }

  /// Uniform double in [0, 1) with 53 bits of randomness.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tunopt
