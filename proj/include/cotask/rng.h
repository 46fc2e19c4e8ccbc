// Copyright 2026 The Cotask Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COTASK_RNG_H_
#define COTASK_RNG_H_

#include <cstdint>
#include <random>

namespace cotask {

// splitmix64 finalizer; used to spread low-entropy seeds and to derive
// substream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic pseudorandom stream. All draws are implemented on top of
// the raw 64-bit output of std::mt19937_64, whose sequence is pinned by the
// standard, so identical seeds give identical draws on every platform and
// standard library.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  // Independent stream derived from (master_seed, stream_id). One substream
  // per robot plus one for the harness.
  static RngStream substream(std::uint64_t master_seed,
                             std::uint64_t stream_id) {
    return RngStream(splitmix64(master_seed) + stream_id);
  }

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  // Unbiased uniform integer in [0, n); n >= 1. Rejection sampling, so no
  // modulo bias regardless of n.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cotask

#endif  // COTASK_RNG_H_
