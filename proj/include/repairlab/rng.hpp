// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace repairlab {

/// SplitMix64 (Steele, Lea, Flood). State advances by 0x9E3779B97F4A7C15 and
/// the output is mixed with the multipliers 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB using shifts 30, 27, 31. Reimplementations in other
/// languages reproduce identical trial messages from the same seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound). Plain modulo; the bias is irrelevant for
  /// test-message generation and keeps the stream trivially portable.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Seed of trial `t`: the t-th output (0-based) of SplitMix64(seed).
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) {
  SplitMix64 base(seed);
  std::uint64_t out = base.next();
  for (std::uint64_t i = 0; i < t; ++i) out = base.next();
  return out;
}

}  // namespace repairlab
