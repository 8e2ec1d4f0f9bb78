#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fluidnet/torus.hpp"

namespace fluidnet {

enum class LayoutModel { kHexagonal, kPoisson };

std::string_view to_string(LayoutModel model);

/// Station density of a hexagonal network with half inter-site distance
/// `half_isd`: one station per hexagon of area 2*sqrt(3)*half_isd^2.
double hexagonal_density(double half_isd);

/// Inverse of hexagonal_density.
double half_isd_for_density(double density);

struct NetworkLayout {
  TorusRegion region;
  std::vector<Point> stations;
  LayoutModel model = LayoutModel::kPoisson;
  double density = 0.0;
  std::uint64_t seed = 0;
  double half_isd = 0.0;
  // Number of zero-station draws discarded before this layout (Poisson only).
  unsigned redraws = 0;
};

/// Triangular lattice patch of 1 + 3*rings*(rings+1) stations wrapped on its
/// hexagonal supercell. Station 0 sits at the region centre; the rest follow
/// ring by ring. Throws kInsufficientStations for rings == 0.
NetworkLayout generate_hexagonal(double half_isd, unsigned rings, std::uint64_t seed = 0);

/// Poisson(density * area) stations, i.i.d. uniform on the region. A draw of
/// zero stations is discarded and redrawn from the next sub-seed.
NetworkLayout generate_poisson(const TorusRegion& region, double density, std::uint64_t seed);

/// Square torus holding `expected_count` stations on average at the
/// hexagonal-equivalent density of `half_isd`.
TorusRegion region_for_expected_count(double half_isd, double expected_count);

/// Layout CSV: `# key=value` comment lines, then `bs_id,x,y`.
void write_layout_csv(std::ostream& out, const NetworkLayout& layout, std::string_view digest);

}  // namespace fluidnet
