#include "fluidnet/sinr.hpp"

#include <cmath>

#include "fluidnet/error.hpp"
#include "fluidnet/rng.hpp"

namespace fluidnet {

void PropagationModel::validate() const {
  if (!(path_loss_exponent > 2.0)) {
    throw Error(ErrorKind::kDomainError, "path-loss exponent must exceed 2");
  }
  if (!(path_gain_constant > 0.0)) throw Error(ErrorKind::kDomainError, "K must be positive");
  if (!(tx_power > 0.0)) throw Error(ErrorKind::kDomainError, "P must be positive");
  if (!(thermal_noise >= 0.0)) throw Error(ErrorKind::kDomainError, "N_th must be >= 0");
}

double path_gain(const PropagationModel& model, double distance) {
  if (!(distance > 0.0)) {
    throw Error(ErrorKind::kNonPositiveDistance, "path gain needs a positive distance");
  }
  return model.path_gain_constant * std::pow(distance, -model.path_loss_exponent);
}

UserSet draw_users(const TorusRegion& region, std::size_t count, std::uint64_t seed,
                   double exclusion_radius) {
  UserSet users{{}, seed, exclusion_radius};
  users.points.reserve(count);
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = rng.uniform(0.0, region.width());
    const double y = rng.uniform(0.0, region.height());
    users.points.push_back({x, y});
  }
  return users;
}

std::size_t best_server(const NetworkLayout& layout, Point user) {
  if (layout.stations.empty()) {
    throw Error(ErrorKind::kInsufficientStations, "layout has no stations");
  }
  std::size_t best = 0;
  double best_distance = layout.region.distance(user, layout.stations[0]);
  for (std::size_t j = 1; j < layout.stations.size(); ++j) {
    const double d = layout.region.distance(user, layout.stations[j]);
    if (d < best_distance) {
      best_distance = d;
      best = j;
    }
  }
  return best;
}

Point clamp_to_exclusion(const NetworkLayout& layout, Point user, double radius) {
  const Point server = layout.stations[best_server(layout, user)];
  const Displacement v = layout.region.displacement(server, user);
  const double d = v.norm();
  if (d >= radius) return user;
  if (d == 0.0) return layout.region.wrap({server.x + radius, server.y});
  return layout.region.wrap({server.x + v.dx * (radius / d), server.y + v.dy * (radius / d)});
}

double sinr(const NetworkLayout& layout, const PropagationModel& model, Point user) {
  model.validate();
  const std::size_t serving = best_server(layout, user);
  if (layout.stations.size() < 2 && model.thermal_noise == 0.0) {
    throw Error(ErrorKind::kNoInterference, "single station and no thermal noise");
  }
  double signal = 0.0;
  double interference = 0.0;
  for (std::size_t j = 0; j < layout.stations.size(); ++j) {
    const double received =
        model.tx_power * path_gain(model, layout.region.distance(user, layout.stations[j]));
    if (j == serving) {
      signal = received;
    } else {
      interference += received;
    }
  }
  return signal / (interference + model.thermal_noise);
}

}  // namespace fluidnet
