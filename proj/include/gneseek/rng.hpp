#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace gneseek {

/// Deterministic scalar source. std::mt19937_64 has a standard-specified
/// sequence; the explicit 53-bit conversion below avoids the
/// implementation-defined output of the <random> distribution templates,
/// so identical seeds give identical doubles on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform draw from [0, 1).
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// Unit-rate exponential; used for simplex sampling.
  double exponential() {
    return -std::log1p(-uniform01());
  }

  /// Uniform integer in [lo, hi] (inclusive); modulo bias is irrelevant
  /// for the test-scale ranges this is used with.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace gneseek
