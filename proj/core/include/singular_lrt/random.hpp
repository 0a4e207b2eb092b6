#pragma once

// Seeded random streams. All generators are std::mt19937_64, whose output
// sequence is fixed by the standard; uniforms and normals are produced here
// rather than through <random> distributions, whose algorithms are
// implementation-defined. Normals use the Box-Muller transform.

#include <cstdint>
#include <random>

namespace slrt {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for substream `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1].
  double uniform_pos() noexcept {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  /// Two independent standard normals.
  void normal_pair(double& a, double& b) noexcept;

 private:
  std::mt19937_64 engine_;
};

}  // namespace slrt
