#include "fluidnet/sinr_kernel.hpp"

#include <cmath>
#include <exception>

#include "fluidnet/error.hpp"
#include "fluidnet/sinr.hpp"

namespace fluidnet {

namespace {

// Fills log distances from `user` to every station and returns the nearest
// station (lowest index on ties).
std::size_t fill_log_distances(const NetworkLayout& layout, Point user,
                               std::vector<double>& log_distance, double& nearest) {
  const std::size_t n = layout.stations.size();
  std::size_t best = 0;
  nearest = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = layout.region.distance(user, layout.stations[j]);
    if (j == 0 || d < nearest) {
      nearest = d;
      best = j;
    }
    log_distance[j] = d > 0.0 ? std::log(d) : -HUGE_VAL;
  }
  return best;
}

}  // namespace

void evaluate_user(const NetworkLayout& layout, Point user, const KernelParams& params,
                   KernelScratch& scratch, double* out, std::size_t stride) {
  const std::size_t n = layout.stations.size();
  if (n < 2 && params.thermal_noise == 0.0) {
    throw Error(ErrorKind::kNoInterference, "single station and no thermal noise");
  }
  auto& logd = scratch.log_distance;
  logd.resize(n);

  double nearest = 0.0;
  std::size_t serving = fill_log_distances(layout, user, logd, nearest);
  if (nearest < params.exclusion_radius) {
    const Point moved = clamp_to_exclusion(layout, user, params.exclusion_radius);
    serving = fill_log_distances(layout, moved, logd, nearest);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (logd[j] == -HUGE_VAL) {
      throw Error(ErrorKind::kNonPositiveDistance, "user coincides with a station");
    }
  }

  // gamma = 1 / (sum_{j != i} (r_i / r_j)^eta + N / (P K r_i^-eta))
  const double log_serving = logd[serving];
  const double noise_scale = params.thermal_noise / (params.tx_power * params.path_gain_constant);
  for (std::size_t e = 0; e < params.etas.size(); ++e) {
    const double eta = params.etas[e];
    double relative = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != serving) relative += std::exp(-eta * (logd[j] - log_serving));
    }
    if (noise_scale > 0.0) relative += noise_scale * std::exp(eta * log_serving);
    out[e * stride] = 1.0 / relative;
  }
}

void evaluate_layout(const NetworkLayout& layout, std::span<const Point> users,
                     const KernelParams& params, std::span<double> out, ExecutionMode mode) {
  const std::size_t count = users.size();
  if (out.size() < count * params.etas.size()) {
    throw Error(ErrorKind::kDomainError, "output buffer too small");
  }
  if (mode == ExecutionMode::kSerial) {
    KernelScratch scratch;
    for (std::size_t u = 0; u < count; ++u) {
      evaluate_user(layout, users[u], params, scratch, out.data() + u, count);
    }
    return;
  }

  std::exception_ptr failure;
#pragma omp parallel
  {
    KernelScratch scratch;
#pragma omp for schedule(static)
    for (std::ptrdiff_t u = 0; u < static_cast<std::ptrdiff_t>(count); ++u) {
      try {
        evaluate_user(layout, users[u], params, scratch, out.data() + u, count);
      } catch (...) {
#pragma omp critical(fluidnet_kernel_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace fluidnet
