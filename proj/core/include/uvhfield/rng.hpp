// Copyright Contributors to the uvhfield Project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace uvh {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Combine a base seed with stream identifiers into an independent stream seed.
inline uint64_t seed_stream(uint64_t seed, uint64_t a, uint64_t b = 0) {
  return splitmix64(splitmix64(seed ^ 0x853c49e6748fea9bULL) ^ splitmix64(a) ^ (b * 0xda942042e4dd58b5ULL));
}

// PCG32: small, fast, reproducible across platforms. One instance per
// logical stream (ray, pixel, step) keeps parallel sampling deterministic.
class Pcg32 {
 public:
  explicit Pcg32(uint64_t seed = 0x4d595df4d0f33173ULL) {
    state_ = 0;
    next();
    state_ += splitmix64(seed);
    next();
  }

  uint32_t next() {
    uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + 1442695040888963407ULL;
    uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
    uint32_t rot = static_cast<uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  // Uniform in [0, 1). Float-valued on purpose: the double-precision
  // pipeline consumes the same jitter values as the float one.
  float uniform() { return static_cast<float>(next() >> 8) * 0x1p-24f; }

  // Uniform integer in [0, n).
  uint32_t below(uint32_t n) { return static_cast<uint32_t>((static_cast<uint64_t>(next()) * n) >> 32); }

  // Uniform in [lo, hi).
  float range(float lo, float hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller.
  float normal() {
    float u1 = uniform();
    float u2 = uniform();
    if (u1 < 1e-12f) u1 = 1e-12f;
    return std::sqrt(-2.0f * std::log(u1)) * std::cos(6.28318530717958648f * u2);
  }

 private:
  uint64_t state_;
};

}  // namespace uvh
