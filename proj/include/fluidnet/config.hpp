#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fluidnet/fluid.hpp"

namespace fluidnet {

enum class ModelChoice { kPoisson, kHex, kFluid };

std::string_view to_string(ModelChoice model);
ModelChoice parse_model(std::string_view text);

/// Every knob of an experiment. Field names double as config-file keys.
struct ExperimentConfig {
  double half_isd = 1.0;
  double expected_stations = 50.0;
  std::vector<double> eta_list = {2.2, 2.4, 2.6, 2.8, 3.0, 3.2, 3.4, 3.6, 3.8, 4.0, 4.2};
  std::size_t runs = 100;
  std::size_t users = 2000;
  std::uint64_t seed = 1;
  double exclusion = 0.01;
  double density_scale = 1.0;
  double noise_w = 0.0;
  double tx_power_w = 1.0;
  double path_gain_k = 1.0;
  unsigned rings = 4;
  std::size_t hex_users = 20000;
  CellExtent fluid_cell = CellExtent::kEqualArea;
  double fit_a = 3.0;
  double fit_b = -6.0;
  std::vector<double> outage_thresholds_db = {-5.0, 0.0, 5.0};
  std::size_t curve_points = 512;
  ModelChoice model = ModelChoice::kPoisson;

  /// Half inter-site distance after density scaling: half_isd / sqrt(scale).
  double effective_half_isd() const;
  FitCoefficients canonical_fit() const { return {fit_a, fit_b}; }

  /// Throws kConfigError on any out-of-range field.
  void validate() const;
};

/// Sets one field from its textual value. kConfigError on unknown keys or
/// malformed values.
void set_config_value(ExperimentConfig& config, std::string_view key, std::string_view value);

/// Applies `key = value` lines (with `#` comments) onto `config`.
void apply_config_text(ExperimentConfig& config, std::string_view text);
void apply_config_file(ExperimentConfig& config, const std::string& path);

/// Comma list `2.6,2.8` or range `start:stop:step` (inclusive stop).
std::vector<double> parse_double_list(std::string_view text);

/// Canonical `key = value` listing of every field, sorted by key.
std::string canonical_text(const ExperimentConfig& config);

/// 16 hex digits of FNV-1a 64 over canonical_text().
std::string config_digest(const ExperimentConfig& config);

}  // namespace fluidnet
