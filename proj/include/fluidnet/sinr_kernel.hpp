#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fluidnet/placement.hpp"

namespace fluidnet {

enum class ExecutionMode { kSerial, kParallel };

struct KernelParams {
  std::vector<double> etas;
  double path_gain_constant = 1.0;
  double tx_power = 1.0;
  double thermal_noise = 0.0;
  double exclusion_radius = 0.0;
};

/// Per-thread workspace so the inner loop does not allocate.
struct KernelScratch {
  std::vector<double> log_distance;
};

/// SINR of one user for every exponent in params.etas, written to
/// out[e * stride]. The user is clamped to the exclusion radius first. Powers
/// are evaluated as exp(-eta * log r) from one log per station, which is what
/// makes many exponents per pass cheap.
void evaluate_user(const NetworkLayout& layout, Point user, const KernelParams& params,
                   KernelScratch& scratch, double* out, std::size_t stride);

/// SINR matrix for a user set: out[e * users.size() + u]. Parallel mode
/// splits users across OpenMP threads; each entry is computed by the same
/// per-user routine, so both modes give bit-identical results.
void evaluate_layout(const NetworkLayout& layout, std::span<const Point> users,
                     const KernelParams& params, std::span<double> out,
                     ExecutionMode mode = ExecutionMode::kParallel);

}  // namespace fluidnet
