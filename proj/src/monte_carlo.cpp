#include "fluidnet/monte_carlo.hpp"

#include <cmath>
#include <exception>
#include <ostream>

#include "fluidnet/csv.hpp"
#include "fluidnet/ecdf.hpp"
#include "fluidnet/error.hpp"
#include "fluidnet/rng.hpp"
#include "fluidnet/sinr.hpp"

namespace fluidnet {

namespace {

void validate(const MonteCarloConfig& config) {
  if (config.etas.empty()) throw Error(ErrorKind::kConfigError, "no path-loss exponents");
  for (double eta : config.etas) {
    if (!(eta > 2.0)) throw Error(ErrorKind::kConfigError, "every eta must exceed 2");
  }
  if (config.runs < 1) throw Error(ErrorKind::kConfigError, "runs must be >= 1");
  if (config.users < 1) throw Error(ErrorKind::kConfigError, "users must be >= 1");
  if (!(config.half_isd > 0.0)) throw Error(ErrorKind::kConfigError, "half_isd must be > 0");
  if (!(config.exclusion >= 0.0 && config.exclusion < 1.0)) {
    throw Error(ErrorKind::kConfigError, "exclusion must lie in [0, 1)");
  }
  if (!(config.path_gain_constant > 0.0) || !(config.tx_power > 0.0) ||
      !(config.thermal_noise >= 0.0)) {
    throw Error(ErrorKind::kConfigError, "K, P must be > 0 and N_th >= 0");
  }
}

}  // namespace

std::vector<SinrSampleSet> run_monte_carlo(const MonteCarloConfig& config) {
  validate(config);

  std::vector<NetworkLayout> layouts;
  layouts.reserve(config.layout_model == LayoutModel::kPoisson ? config.runs : 1);
  if (config.layout_model == LayoutModel::kHexagonal) {
    layouts.push_back(generate_hexagonal(config.half_isd, config.rings, config.seed));
  } else {
    const TorusRegion region = region_for_expected_count(config.half_isd, config.expected_stations);
    const double density = hexagonal_density(config.half_isd);
    for (std::size_t k = 1; k <= config.runs; ++k) {
      layouts.push_back(generate_poisson(region, density, sub_seed(config.seed, k)));
    }
  }
  for (const auto& layout : layouts) {
    if (layout.stations.size() < 2) {
      throw Error(ErrorKind::kInsufficientStations,
                  "a run drew " + std::to_string(layout.stations.size()) + " station(s)");
    }
  }

  const double exclusion_radius = config.exclusion * config.half_isd;
  const UserSet users = draw_users(layouts.front().region, config.users,
                                   sub_seed(config.seed, kUserStream), exclusion_radius);
  const KernelParams params{config.etas, config.path_gain_constant, config.tx_power,
                            config.thermal_noise, exclusion_radius};

  const std::size_t per_eta = config.runs * config.users;
  std::vector<double> buffer(per_eta * config.etas.size());
  auto layout_for_run = [&](std::size_t run) -> const NetworkLayout& {
    return layouts.size() == 1 ? layouts.front() : layouts[run];
  };

  if (config.mode == ExecutionMode::kSerial) {
    KernelScratch scratch;
    for (std::size_t idx = 0; idx < per_eta; ++idx) {
      evaluate_user(layout_for_run(idx / config.users), users.points[idx % config.users], params,
                    scratch, buffer.data() + idx, per_eta);
    }
  } else {
    std::exception_ptr failure;
#pragma omp parallel
    {
      KernelScratch scratch;
#pragma omp for schedule(static)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(per_eta); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
          evaluate_user(layout_for_run(idx / config.users), users.points[idx % config.users],
                        params, scratch, buffer.data() + idx, per_eta);
        } catch (...) {
#pragma omp critical(fluidnet_mc_failure)
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<SinrSampleSet> sets;
  sets.reserve(config.etas.size());
  for (std::size_t e = 0; e < config.etas.size(); ++e) {
    const auto first = buffer.begin() + static_cast<std::ptrdiff_t>(e * per_eta);
    sets.push_back({std::vector<double>(first, first + static_cast<std::ptrdiff_t>(per_eta)),
                    config.etas[e], config.runs, config.users, config.layout_model,
                    config.config_digest, config.seed});
  }
  return sets;
}

void write_samples_csv(std::ostream& out, const SinrSampleSet& set) {
  write_comment(out, "model", to_string(set.layout_model));
  write_comment(out, "eta", set.eta);
  write_comment(out, "seed", std::to_string(set.seed));
  write_comment(out, "runs", std::to_string(set.runs));
  write_comment(out, "users", std::to_string(set.users_per_run));
  write_comment(out, "digest", set.config_digest);
  out << "run,ue_id,sinr_linear,sinr_db\n";
  for (std::size_t i = 0; i < set.samples.size(); ++i) {
    const std::size_t run = set.users_per_run ? i / set.users_per_run : 0;
    const std::size_t ue = set.users_per_run ? i % set.users_per_run : i;
    out << run + 1 << ',' << ue << ',' << format_double(set.samples[i]) << ','
        << format_double(to_db(set.samples[i])) << '\n';
  }
}

}  // namespace fluidnet
