#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace svt2d {

// All randomness flows through this header. The generator is std::mt19937_64,
// whose output sequence is pinned by the C++ standard, and every draw on top
// of it (bounded integers, Gaussians) is spelled out below instead of going
// through std::uniform_int_distribution / std::normal_distribution, whose
// algorithms differ between standard libraries. Streams are therefore
// bit-identical across platforms and reimplementations.

/// SplitMix64 finalizer (Steele/Lea/Flood).
std::uint64_t mix64(std::uint64_t z);

/// Derived seed rule: s = base; for each path component c,
/// s = mix64(s + 0x9E3779B97F4A7C15 * (c + 1)); return s.
/// Used to give every (stream, sweep cell, repeat) an independent seed
/// without any shared RNG state.
std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> path);

// Stream tags for derive_seed.
inline constexpr std::uint64_t kMaskStream = 1;
inline constexpr std::uint64_t kNoiseStream = 2;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, bound), bound >= 1. Rejection sampling: draw 64-bit words,
  /// discard those >= floor(2^64 / bound) * bound, reduce modulo bound.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform on [0, 1) with 53-bit resolution: (word >> 11) * 2^-53.
  double uniform01();

  /// Standard normal via Box-Muller. Each pair of uniforms yields two values;
  /// the second is cached and returned on the next call.
  double gaussian();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace svt2d
