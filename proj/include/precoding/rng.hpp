// Copyright 2026 The Precoding Toolkit Authors.
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

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace precoding {

// Deterministic seed derivation. All randomness in the toolkit flows from a
// master seed through this chain, so runs are reproducible bit-for-bit and
// independent streams never collide by construction.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t seed_combine(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64(seed ^ splitmix64(tag));
}

template <typename... Tags>
std::uint64_t seed_combine(std::uint64_t seed, std::uint64_t tag, Tags... rest) {
  return seed_combine(seed_combine(seed, tag), static_cast<std::uint64_t>(rest)...);
}

// Gaussian draws via Box-Muller on raw mt19937_64 output. std::normal_distribution
// is implementation-defined, which would break cross-platform reproducibility of
// golden files and transcripts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // in [0, 1)
    return (engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t integer(std::uint64_t bound) {  // in [0, bound)
    return engine_() % bound;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Circularly-symmetric complex Gaussian, zero mean, unit variance.
  std::complex<double> cn01() {
    const double re = gaussian();
    const double im = gaussian();
    return {re * 0.7071067811865475244, im * 0.7071067811865475244};
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace precoding
