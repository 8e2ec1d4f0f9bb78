#include "fluidnet/rng.hpp"

#include <cmath>

#include "fluidnet/error.hpp"

namespace fluidnet {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ (stream * 0x9E3779B97F4A7C15ULL));
}

namespace {

constexpr double kMaxChunk = 500.0;

std::uint64_t poisson_by_inversion(Rng& rng, double mean) {
  const double u = rng.uniform();
  double term = std::exp(-mean);
  double cdf = term;
  std::uint64_t k = 0;
  // Past this bound the remaining mass is below double resolution.
  const double limit = mean + 40.0 * std::sqrt(mean) + 100.0;
  while (u > cdf && static_cast<double>(k) < limit) {
    ++k;
    term *= mean / static_cast<double>(k);
    cdf += term;
  }
  return k;
}

}  // namespace

std::uint64_t Rng::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw Error(ErrorKind::kDomainError, "Poisson mean must be finite and >= 0");
  }
  if (mean == 0.0) return 0;
  const auto chunks = static_cast<std::uint64_t>(std::ceil(mean / kMaxChunk));
  const double part = mean / static_cast<double>(chunks);
  std::uint64_t total = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) total += poisson_by_inversion(*this, part);
  return total;
}

}  // namespace fluidnet
