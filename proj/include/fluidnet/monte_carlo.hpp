#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fluidnet/placement.hpp"
#include "fluidnet/sinr_kernel.hpp"

namespace fluidnet {

struct MonteCarloConfig {
  LayoutModel layout_model = LayoutModel::kPoisson;
  double half_isd = 1.0;
  double expected_stations = 50.0;  // Poisson only
  unsigned rings = 4;               // hexagonal only
  std::vector<double> etas{3.0};
  std::size_t runs = 100;
  std::size_t users = 2000;
  std::uint64_t seed = 1;
  double exclusion = 0.01;  // fraction of half_isd
  double path_gain_constant = 1.0;
  double tx_power = 1.0;
  double thermal_noise = 0.0;
  std::string config_digest;
  ExecutionMode mode = ExecutionMode::kParallel;
};

/// Pooled linear SINR values, run-major: samples[run * users_per_run + ue].
struct SinrSampleSet {
  std::vector<double> samples;
  double eta = 0.0;
  std::size_t runs = 0;
  std::size_t users_per_run = 0;
  LayoutModel layout_model = LayoutModel::kPoisson;
  std::string config_digest;
  std::uint64_t seed = 0;
};

/// Stream ids for sub_seed(): users come from stream 0, run k uses stream k.
inline constexpr std::uint64_t kUserStream = 0;

/// Fixed user set, one layout per run (Poisson layouts redrawn from
/// sub_seed(seed, k) for run k = 1..runs), SINR for every user in every run.
/// Returns one sample set per entry of config.etas, in the same order.
/// Throws kInsufficientStations if a run has fewer than two stations.
std::vector<SinrSampleSet> run_monte_carlo(const MonteCarloConfig& config);

/// `run,ue_id,sinr_linear,sinr_db` with `#` provenance lines.
void write_samples_csv(std::ostream& out, const SinrSampleSet& set);

}  // namespace fluidnet
