#pragma once

#include <vector>

#include "fluidnet/config.hpp"
#include "fluidnet/ecdf.hpp"
#include "fluidnet/fitting.hpp"
#include "fluidnet/fluid.hpp"
#include "fluidnet/monte_carlo.hpp"

namespace fluidnet {

MonteCarloConfig monte_carlo_config(const ExperimentConfig& config, LayoutModel model);

FluidModel fluid_model(const ExperimentConfig& config, double eta);
FluidCell fluid_cell(const ExperimentConfig& config, double eta);

/// Everything computed for one path-loss exponent.
struct EtaComparison {
  double eta;
  EmpiricalCdf poisson;
  FluidCdf fluid;
  FluidCdf fitted;         // shifted by the canonical (a, b)
  double mean_shift_db;    // fluid vs Poisson on the default p grid
  double zeta;             // fitted fluid vs Poisson
};

struct FitExperiment {
  std::vector<EtaComparison> per_eta;
  ShiftFit fit;
};

/// Poisson Monte Carlo for every eta, fluid CDFs, shift estimation and the
/// linear fit. Needs at least two distinct etas (kConfigError otherwise).
FitExperiment run_fit_experiment(const ExperimentConfig& config);

/// Monte Carlo over a hexagonal layout (runs = 1: the layout is
/// deterministic) with config.hex_users users.
std::vector<SinrSampleSet> run_hexagonal_reference(const ExperimentConfig& config);

/// Plot grid for an empirical CDF: `points` uniform dB values between the
/// 0.1% and 99.9% quantiles.
std::vector<double> empirical_plot_grid(const EmpiricalCdf& cdf, std::size_t points);

/// Ascending dB values of fluid SINR on a geometric r grid over the cell.
std::vector<double> fluid_plot_grid(const FluidCdf& cdf, std::size_t points);

}  // namespace fluidnet
