#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fluidnet/commands.hpp"
#include "fluidnet/error.hpp"

namespace {

struct SharedFlags {
  std::optional<std::string> config_path;
  std::optional<std::string> seed;
  std::optional<std::string> out;
  std::optional<std::string> eta;
  std::optional<std::string> runs;
  std::optional<std::string> users;
  std::optional<std::string> model;
  std::optional<std::string> density_scale;
  std::optional<std::string> rings;
  std::vector<std::string> overrides;
  bool samples = false;
};

void add_shared_flags(CLI::App& cmd, SharedFlags& flags) {
  cmd.add_option("--config", flags.config_path, "key = value config file");
  cmd.add_option("--seed", flags.seed, "base seed");
  cmd.add_option("--out", flags.out, "output directory");
  cmd.add_option("--eta", flags.eta, "path-loss exponents: 2.6,2.8 or 2.2:4.2:0.2");
  cmd.add_option("--runs", flags.runs, "Monte Carlo runs");
  cmd.add_option("--users", flags.users, "users per run");
  cmd.add_option("--model", flags.model, "poisson | hex | fluid");
  cmd.add_option("--density-scale", flags.density_scale, "station density multiplier");
  cmd.add_option("--rings", flags.rings, "hexagonal rings");
  cmd.add_option("--set", flags.overrides, "extra key=value config override (repeatable)");
}

fluidnet::CommandContext build_context(const SharedFlags& flags) {
  using fluidnet::set_config_value;
  fluidnet::CommandContext context;
  auto& config = context.config;
  if (flags.config_path) fluidnet::apply_config_file(config, *flags.config_path);
  for (const auto& item : flags.overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw fluidnet::Error(fluidnet::ErrorKind::kConfigError, "--set expects key=value");
    }
    set_config_value(config, item.substr(0, eq), item.substr(eq + 1));
  }
  if (flags.seed) set_config_value(config, "seed", *flags.seed);
  if (flags.eta) set_config_value(config, "eta_list", *flags.eta);
  if (flags.runs) set_config_value(config, "runs", *flags.runs);
  if (flags.users) set_config_value(config, "users", *flags.users);
  if (flags.model) set_config_value(config, "model", *flags.model);
  if (flags.density_scale) set_config_value(config, "density_scale", *flags.density_scale);
  if (flags.rings) set_config_value(config, "rings", *flags.rings);
  if (flags.out) context.out_dir = *flags.out;
  context.export_samples = flags.samples;
  context.data_out = &std::cout;
  context.log = &std::cerr;
  return context;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fluid, Poisson and hexagonal cellular SINR experiments"};
  app.require_subcommand(1);

  SharedFlags generate_flags, cdf_flags, fit_flags, report_flags;
  auto* generate = app.add_subcommand("generate", "write a base-station layout CSV");
  add_shared_flags(*generate, generate_flags);
  auto* cdf = app.add_subcommand("cdf", "SINR CDF per eta for one model");
  add_shared_flags(*cdf, cdf_flags);
  cdf->add_flag("--samples", cdf_flags.samples, "also export raw SINR samples");
  auto* fit = app.add_subcommand("fit", "fit the fluid-to-Poisson shift against eta");
  add_shared_flags(*fit, fit_flags);
  auto* report = app.add_subcommand("report", "full comparison report directory");
  add_shared_flags(*report, report_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fluidnet::kExitConfigError;
  }

  try {
    if (*generate) return fluidnet::cmd_generate(build_context(generate_flags));
    if (*cdf) return fluidnet::cmd_cdf(build_context(cdf_flags));
    if (*fit) return fluidnet::cmd_fit(build_context(fit_flags));
    if (*report) return fluidnet::cmd_report(build_context(report_flags));
  } catch (const fluidnet::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == fluidnet::ErrorKind::kConfigError ? fluidnet::kExitConfigError
                                                          : fluidnet::kExitRuntimeError;
  }
  return fluidnet::kExitConfigError;
}
