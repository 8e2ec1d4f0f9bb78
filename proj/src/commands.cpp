#include "fluidnet/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fluidnet/csv.hpp"
#include "fluidnet/error.hpp"
#include "fluidnet/experiment.hpp"
#include "fluidnet/rng.hpp"

namespace fluidnet {

namespace {

namespace fs = std::filesystem;

std::ostream& log_stream(const CommandContext& context) {
  return context.log ? *context.log : std::cerr;
}

fs::path output_dir(const CommandContext& context) {
  const fs::path dir = context.out_dir.value_or(fs::path("out"));
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kDomainError, "cannot write " + path.string());
  body(out);
  if (!out) throw Error(ErrorKind::kDomainError, "write failed for " + path.string());
}

std::string eta_tag(double eta) { return "eta" + format_double(eta); }

fs::path cdf_path(const fs::path& dir, std::string_view model, double eta) {
  return dir / ("cdf_" + std::string(model) + "_" + eta_tag(eta) + ".csv");
}

template <typename Body>
int guarded(const CommandContext& context, Body&& body) {
  try {
    context.config.validate();
    body();
    return kExitOk;
  } catch (const Error& e) {
    log_stream(context) << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::kConfigError ? kExitConfigError : kExitRuntimeError;
  } catch (const std::exception& e) {
    log_stream(context) << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

LayoutModel layout_model(ModelChoice model) {
  if (model == ModelChoice::kFluid) {
    throw Error(ErrorKind::kConfigError, "the fluid model has no discrete layout");
  }
  return model == ModelChoice::kHex ? LayoutModel::kHexagonal : LayoutModel::kPoisson;
}

void write_empirical_cdf(const fs::path& path, const EmpiricalCdf& cdf, std::size_t points,
                         std::string_view digest) {
  write_file(path, [&](std::ostream& out) {
    write_cdf_csv(out, cdf, empirical_plot_grid(cdf, points), digest);
  });
}

void write_fluid_cdf(const fs::path& path, const FluidCdf& cdf, std::size_t points,
                     std::string_view digest) {
  write_file(path, [&](std::ostream& out) {
    write_cdf_csv(out, cdf, fluid_plot_grid(cdf, points), digest);
  });
}

// Poisson, fluid and fitted-fluid CDFs on one shared dB grid.
void write_comparison(const fs::path& path, const EtaComparison& c, std::size_t points,
                      std::string_view digest) {
  write_file(path, [&](std::ostream& out) {
    write_comment(out, "eta", c.eta);
    write_comment(out, "digest", digest);
    out << "sinr_db,poisson,fluid,fitted_fluid\n";
    for (double g : joint_db_grid(c.fitted, c.poisson, points)) {
      const double row[] = {g, c.poisson.evaluate(g), c.fluid.evaluate(g), c.fitted.evaluate(g)};
      write_row(out, row);
    }
  });
}

void write_fit_outputs(const fs::path& dir, const FitExperiment& experiment,
                       const ExperimentConfig& config, std::string_view digest) {
  write_file(dir / "fit.csv",
             [&](std::ostream& out) { write_fit_csv(out, experiment.fit, digest); });
  for (const auto& c : experiment.per_eta) {
    write_empirical_cdf(cdf_path(dir, "poisson", c.eta), c.poisson, config.curve_points, digest);
    write_fluid_cdf(cdf_path(dir, "fluid", c.eta), c.fluid, config.curve_points, digest);
    write_fluid_cdf(cdf_path(dir, "fitted", c.eta), c.fitted, config.curve_points, digest);
    write_comparison(dir / ("compare_" + eta_tag(c.eta) + ".csv"), c, config.curve_points,
                     digest);
  }
}

// Median gap (fluid minus other) and post-fit quantile gaps for report.txt.
double quantile_gap(const FluidCdf& fluid, const EmpiricalCdf& other, double p) {
  return fluid.quantile(p) - other.quantile(p);
}

double mean_abs_gap(const FluidCdf& fitted, const EmpiricalCdf& poisson) {
  double sum = 0.0;
  int count = 0;
  for (int i = 5; i <= 95; ++i, ++count) {
    sum += std::abs(quantile_gap(fitted, poisson, 0.01 * i));
  }
  return sum / count;
}

}  // namespace

int cmd_generate(const CommandContext& context) {
  return guarded(context, [&] {
    const ExperimentConfig& config = context.config;
    const double half_isd = config.effective_half_isd();
    NetworkLayout layout =
        layout_model(config.model) == LayoutModel::kHexagonal
            ? generate_hexagonal(half_isd, config.rings, config.seed)
            : generate_poisson(region_for_expected_count(half_isd, config.expected_stations),
                               hexagonal_density(half_isd), config.seed);
    log_stream(context) << "generated " << layout.stations.size() << " stations ("
                        << to_string(layout.model) << ", seed " << config.seed << ")\n";
    const std::string digest = config_digest(config);
    if (context.out_dir) {
      const fs::path dir = output_dir(context);
      write_file(dir / ("layout_" + std::string(to_string(config.model)) + ".csv"),
                 [&](std::ostream& out) { write_layout_csv(out, layout, digest); });
    } else {
      write_layout_csv(context.data_out ? *context.data_out : std::cout, layout, digest);
    }
  });
}

int cmd_cdf(const CommandContext& context) {
  return guarded(context, [&] {
    const ExperimentConfig& config = context.config;
    const std::string digest = config_digest(config);
    const fs::path dir = output_dir(context);
    if (config.model == ModelChoice::kFluid) {
      for (double eta : config.eta_list) {
        const FluidModel model = fluid_model(config, eta);
        const FluidCell cell = fluid_cell(config, eta);
        write_fluid_cdf(cdf_path(dir, "fluid", eta), FluidCdf(model, cell), config.curve_points,
                        digest);
        write_file(dir / ("fluid_curve_" + eta_tag(eta) + ".csv"), [&](std::ostream& out) {
          write_fluid_curve_csv(out, model, cell, config.curve_points, digest);
        });
      }
      log_stream(context) << "wrote fluid CDFs for " << config.eta_list.size() << " etas\n";
      return;
    }
    const LayoutModel model = layout_model(config.model);
    log_stream(context) << "running " << to_string(model) << " Monte Carlo\n";
    const auto sets = run_monte_carlo(monte_carlo_config(config, model));
    for (const auto& set : sets) {
      write_empirical_cdf(cdf_path(dir, to_string(config.model), set.eta), empirical_cdf(set),
                          config.curve_points, digest);
      if (context.export_samples) {
        write_file(dir / ("samples_" + std::string(to_string(config.model)) + "_" +
                          eta_tag(set.eta) + ".csv"),
                   [&](std::ostream& out) { write_samples_csv(out, set); });
      }
    }
    log_stream(context) << "wrote " << sets.size() << " CDF files to " << dir.string() << '\n';
  });
}

int cmd_fit(const CommandContext& context) {
  return guarded(context, [&] {
    const ExperimentConfig& config = context.config;
    const std::string digest = config_digest(config);
    const fs::path dir = output_dir(context);
    log_stream(context) << "running Poisson Monte Carlo for " << config.eta_list.size()
                        << " etas\n";
    const FitExperiment experiment = run_fit_experiment(config);
    write_fit_outputs(dir, experiment, config, digest);
    const auto& c = experiment.fit.coefficients;
    log_stream(context) << "fit: a=" << format_double(c.a) << " b=" << format_double(c.b)
                        << " rms=" << format_double(experiment.fit.rms_residual_db) << '\n';
  });
}

int cmd_report(const CommandContext& context) {
  return guarded(context, [&] {
    const ExperimentConfig& config = context.config;
    const std::string digest = config_digest(config);
    const fs::path dir = output_dir(context);

    log_stream(context) << "running Poisson Monte Carlo\n";
    const FitExperiment experiment = run_fit_experiment(config);
    write_fit_outputs(dir, experiment, config, digest);

    log_stream(context) << "running hexagonal reference\n";
    const auto hex_sets = run_hexagonal_reference(config);
    std::vector<EmpiricalCdf> hex_cdfs;
    for (const auto& set : hex_sets) {
      hex_cdfs.push_back(empirical_cdf(set));
      write_empirical_cdf(cdf_path(dir, "hex", set.eta), hex_cdfs.back(), config.curve_points,
                          digest);
    }

    const double half_isd = config.effective_half_isd();
    const NetworkLayout first_layout =
        generate_poisson(region_for_expected_count(half_isd, config.expected_stations),
                         hexagonal_density(half_isd), sub_seed(config.seed, 1));
    write_file(dir / "layout_1.csv",
               [&](std::ostream& out) { write_layout_csv(out, first_layout, digest); });
    write_file(dir / "config.txt", [&](std::ostream& out) {
      write_comment(out, "digest", digest);
      out << canonical_text(config);
    });

    write_file(dir / "correlation.csv", [&](std::ostream& out) {
      write_comment(out, "digest", digest);
      out << "eta,zeta\n";
      for (const auto& c : experiment.per_eta) {
        const double row[] = {c.eta, c.zeta};
        write_row(out, row);
      }
    });

    write_file(dir / "outage.csv", [&](std::ostream& out) {
      write_comment(out, "digest", digest);
      out << "eta,threshold_db,poisson,hex,fluid,fitted_fluid\n";
      for (std::size_t e = 0; e < experiment.per_eta.size(); ++e) {
        const auto& c = experiment.per_eta[e];
        for (double threshold : config.outage_thresholds_db) {
          const double row[] = {c.eta,
                                threshold,
                                outage_probability(c.poisson, threshold),
                                outage_probability(hex_cdfs[e], threshold),
                                c.fluid.evaluate(threshold),
                                c.fitted.evaluate(threshold)};
          write_row(out, row);
        }
      }
    });

    write_file(dir / "throughput.csv", [&](std::ostream& out) {
      write_comment(out, "digest", digest);
      out << "eta,fluid_cell_edge,fluid_cell_average,poisson_mean\n";
      for (const auto& c : experiment.per_eta) {
        const FluidModel model = fluid_model(config, c.eta);
        double poisson_mean = 0.0;
        for (double db : c.poisson.sorted_values_db()) {
          poisson_mean += spectral_efficiency(from_db(db));
        }
        poisson_mean /= static_cast<double>(c.poisson.size());
        const double row[] = {c.eta, cell_edge_throughput(model),
                              average_cell_throughput(model, config.exclusion, config.fluid_cell),
                              poisson_mean};
        write_row(out, row);
      }
    });

    write_file(dir / "report.txt", [&](std::ostream& out) {
      const auto& fit = experiment.fit;
      out << "fluid vs Poisson SINR report\n";
      out << "digest=" << digest << "\n\n";
      out << "linear shift fit: a = " << format_double(fit.coefficients.a)
          << ", b = " << format_double(fit.coefficients.b)
          << ", rms = " << format_double(fit.rms_residual_db) << " dB\n";
      out << "canonical correction: a = " << format_double(config.fit_a)
          << ", b = " << format_double(config.fit_b) << "\n\n";
      out << "eta,mean_shift_db,canonical_shift_db,median_gap_db,postfit_mean_abs_gap_db,"
             "postfit_gap_p05_db,zeta,hex_median_gap_db\n";
      for (std::size_t e = 0; e < experiment.per_eta.size(); ++e) {
        const auto& c = experiment.per_eta[e];
        const double row[] = {c.eta,
                              c.mean_shift_db,
                              config.canonical_fit().shift_db(c.eta),
                              quantile_gap(c.fluid, c.poisson, 0.5),
                              mean_abs_gap(c.fitted, c.poisson),
                              std::abs(quantile_gap(c.fitted, c.poisson, 0.05)),
                              c.zeta,
                              quantile_gap(c.fluid, hex_cdfs[e], 0.5)};
        write_row(out, row);
      }
      out << "\nconfiguration:\n" << canonical_text(config);
    });
    log_stream(context) << "report written to " << dir.string() << '\n';
  });
}

}  // namespace fluidnet
