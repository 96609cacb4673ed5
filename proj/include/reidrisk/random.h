// Copyright 2026 The reidrisk Authors
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

#ifndef REIDRISK_RANDOM_H_
#define REIDRISK_RANDOM_H_

#include <cstdint>
#include <string_view>

namespace reidrisk {

// Stream tags keep the random draws of different estimators independent even
// when they share a user and trial number.
enum class Stream : uint64_t {
  kCost = 1,
  kUnicity = 2,
  kBootstrap = 3,
  kSynthUser = 4,
  kSynthId = 5,
};

// Stable 64-bit hash of an identifier (FNV-1a). Unlike std::hash the value is
// the same on every platform and build.
uint64_t HashId(std::string_view id);

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

// Deterministic sub-seed for one (seed, stream, key, trial) cell.
uint64_t SubSeed(uint64_t seed, Stream stream, uint64_t key, uint64_t trial);

// SplitMix64 stream with the few draws this library needs. Every (user,
// trial) cell gets a fresh generator, so construction must be cheap; the
// std:: engines and distributions are avoided because their seeding cost is
// high and distribution output differs between standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with
  // rejection).
  uint64_t UniformIndex(uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(Next()) * bound;
    auto low = static_cast<uint64_t>(m);
    if (low < bound) {
      uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(Next()) * bound;
        low = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1).
  double UniformDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Standard normal (Box-Muller, one value per call).
  double Normal();

 private:
  uint64_t state_;
};

}  // namespace reidrisk

#endif  // REIDRISK_RANDOM_H_
