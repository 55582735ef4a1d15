// Copyright 2026 The Authors.
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

// Seed derivation and counter-based uniforms.
//
// Monte-Carlo runs never share a sequential generator. Every random decision
// inside a diffusion run is a pure function of (run key, decision coordinates),
// so a given run index sees the same coin for edge (u, v) no matter which
// seed set is being simulated or which thread executes it.

#ifndef MCSRECRUIT_RANDOM_H_
#define MCSRECRUIT_RANDOM_H_

#include <cstdint>

namespace mcsrecruit {

// SplitMix64 finalizer.
constexpr uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent child seed for stream `stream` of `seed`.
constexpr uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  return Mix64(Mix64(seed) ^ Mix64(stream * 0xd1b54a32d192ed03ULL + 1));
}

constexpr uint64_t DeriveSeed(uint64_t seed, uint64_t a, uint64_t b) {
  return DeriveSeed(DeriveSeed(seed, a), b);
}

// Top 53 bits mapped to [0, 1).
constexpr double BitsToUnit(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Uniform in [0, 1) determined by (key, a, b).
constexpr double KeyedUniform(uint64_t key, uint64_t a, uint64_t b) {
  return BitsToUnit(
      Mix64(Mix64(key + a * 0x9fb21c651e98df25ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL)));
}

}  // namespace mcsrecruit

#endif  // MCSRECRUIT_RANDOM_H_
