// Copyright 2026 The lazysearch Authors
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

#ifndef LAZYSEARCH_SAMPLING_HPP
#define LAZYSEARCH_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "lazysearch/geometry.hpp"

namespace lazysearch {

/// Van der Corput radical inverse of `index` in `base`.
double radical_inverse(std::uint64_t index, std::uint32_t base) noexcept;

/// Halton point with bases (2, 3) in the unit square. Index 1 is (1/2, 1/3).
Point halton_point(std::uint64_t index) noexcept;

/// Seeded random stream with platform-independent conversions. The standard
/// distributions are implementation-defined, so they are not used here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Independent stream derived from a seed and a stream label.
  static Rng stream(std::uint64_t seed, std::uint64_t label);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [0, n). Requires n > 0.
  std::uint64_t below(std::uint64_t n);
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lazysearch

#endif  // LAZYSEARCH_SAMPLING_HPP
