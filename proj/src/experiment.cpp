#include "fluidnet/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fluidnet/error.hpp"

namespace fluidnet {

MonteCarloConfig monte_carlo_config(const ExperimentConfig& config, LayoutModel model) {
  MonteCarloConfig mc;
  mc.layout_model = model;
  mc.half_isd = config.effective_half_isd();
  mc.expected_stations = config.expected_stations;
  mc.rings = config.rings;
  mc.etas = config.eta_list;
  mc.runs = model == LayoutModel::kHexagonal ? 1 : config.runs;
  mc.users = model == LayoutModel::kHexagonal ? config.hex_users : config.users;
  mc.seed = config.seed;
  mc.exclusion = config.exclusion;
  mc.path_gain_constant = config.path_gain_k;
  mc.tx_power = config.tx_power_w;
  mc.thermal_noise = config.noise_w;
  mc.config_digest = config_digest(config);
  return mc;
}

FluidModel fluid_model(const ExperimentConfig& config, double eta) {
  return FluidModel::from_half_isd(config.effective_half_isd(), eta);
}

FluidCell fluid_cell(const ExperimentConfig& config, double eta) {
  return make_cell(fluid_model(config, eta), config.exclusion, config.fluid_cell);
}

FitExperiment run_fit_experiment(const ExperimentConfig& config) {
  config.validate();
  if (std::set<double>(config.eta_list.begin(), config.eta_list.end()).size() < 2) {
    throw Error(ErrorKind::kConfigError, "the shift fit needs at least two distinct etas");
  }
  const auto sets = run_monte_carlo(monte_carlo_config(config, LayoutModel::kPoisson));
  const auto grid = default_shift_grid();
  const FitCoefficients canonical = config.canonical_fit();

  FitExperiment result;
  std::vector<double> etas, shifts;
  for (const auto& set : sets) {
    const FluidModel model = fluid_model(config, set.eta);
    const FluidCell cell = fluid_cell(config, set.eta);
    EmpiricalCdf poisson = empirical_cdf(set);
    FluidCdf fluid(model, cell);
    FluidCdf fitted(model, cell, canonical.shift_db(set.eta));
    const double shift = mean_horizontal_shift(fluid, poisson, grid);
    const double zeta = cdf_curve_correlation(fitted, poisson);
    etas.push_back(set.eta);
    shifts.push_back(shift);
    result.per_eta.push_back({set.eta, std::move(poisson), fluid, fitted, shift, zeta});
  }
  result.fit = fit_linear(etas, shifts);
  return result;
}

std::vector<SinrSampleSet> run_hexagonal_reference(const ExperimentConfig& config) {
  config.validate();
  return run_monte_carlo(monte_carlo_config(config, LayoutModel::kHexagonal));
}

std::vector<double> empirical_plot_grid(const EmpiricalCdf& cdf, std::size_t points) {
  double lo = cdf.min(), hi = cdf.max();
  if (cdf.size() > 1) {
    lo = cdf.quantile(0.001);
    hi = cdf.quantile(0.999);
  }
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = points == 1 ? lo
                          : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

std::vector<double> fluid_plot_grid(const FluidCdf& cdf, std::size_t points) {
  const FluidCell& cell = cdf.cell();
  const double ratio = cell.outer_radius / cell.inner_radius;
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    const double r = i + 1 == points ? cell.outer_radius : cell.inner_radius * std::pow(ratio, t);
    grid[i] = to_db(fluid_sinr(cdf.model(), r)) - cdf.offset_db();
  }
  std::reverse(grid.begin(), grid.end());
  return grid;
}

}  // namespace fluidnet
