#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fluidnet/placement.hpp"
#include "fluidnet/propagation.hpp"

namespace fluidnet {

struct UserSet {
  std::vector<Point> points;
  std::uint64_t seed = 0;
  double exclusion_radius = 0.0;
};

/// `count` users i.i.d. uniform on the region.
UserSet draw_users(const TorusRegion& region, std::size_t count, std::uint64_t seed,
                   double exclusion_radius);

/// Index of the nearest station (torus metric); ties go to the lowest index.
std::size_t best_server(const NetworkLayout& layout, Point user);

/// Moves `user` radially away from its best server so that it sits at least
/// `radius` from it. Users already far enough are returned unchanged; a user
/// on top of the station is pushed along +x.
Point clamp_to_exclusion(const NetworkLayout& layout, Point user, double radius);

/// Downlink SINR of `user` served by its best server, every other station
/// interfering. Reference implementation, written term by term from the
/// definition: P*g_i / (sum_{j != i} P*g_j + N_th).
double sinr(const NetworkLayout& layout, const PropagationModel& model, Point user);

}  // namespace fluidnet
