#pragma once

#include <cstdint>

namespace arbelos {

/// SplitMix64 (Steele, Lea, Flood 2014). 64 bits of state, one add and a
/// fixed finalizer per draw, so any language can reproduce a transcript.
///
/// Independent streams are keyed by (seed, index): the initial state is
/// mix(seed + (index + 1) * golden_gamma).
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

  explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static constexpr SplitMix64 stream(std::uint64_t seed,
                                     std::uint64_t index) noexcept {
    return SplitMix64(mix(seed + (index + 1) * kGoldenGamma));
  }

  constexpr std::uint64_t next() noexcept {
    state_ += kGoldenGamma;
    return mix(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace arbelos
