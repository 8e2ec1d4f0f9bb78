#pragma once

#include <cstdint>
#include <random>

namespace fluidnet {

/// Derives an independent stream seed from a base seed and a stream id.
///
/// sub_seed(seed, stream) = splitmix64(splitmix64(seed) ^ (stream * 0x9E3779B97F4A7C15)).
/// Every random draw in the library is made from an Rng seeded this way, so a
/// (seed, stream) pair fully determines the draws.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream);

std::uint64_t splitmix64(std::uint64_t x);

/// Seedable generator: std::mt19937_64 (fully specified by the standard) with
/// hand-written variate transforms so output does not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Poisson variate by sequential search of the CDF. Means above 500 are
  /// split into equal parts whose sum is drawn part by part, which keeps
  /// exp(-mean) away from underflow without changing the distribution.
  std::uint64_t poisson(double mean);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fluidnet
