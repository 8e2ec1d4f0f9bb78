#include "fluidnet/placement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>

#include "fluidnet/csv.hpp"
#include "fluidnet/error.hpp"
#include "fluidnet/rng.hpp"

namespace fluidnet {

std::string_view to_string(LayoutModel model) {
  return model == LayoutModel::kHexagonal ? "hexagonal" : "poisson";
}

double hexagonal_density(double half_isd) {
  return std::numbers::sqrt3 / (6.0 * half_isd * half_isd);
}

double half_isd_for_density(double density) {
  return std::sqrt(std::numbers::sqrt3 / (6.0 * density));
}

NetworkLayout generate_hexagonal(double half_isd, unsigned rings, std::uint64_t seed) {
  if (rings == 0) {
    throw Error(ErrorKind::kInsufficientStations,
                "hexagonal layout needs rings >= 1 to have interferers");
  }
  if (!(half_isd > 0.0)) throw Error(ErrorKind::kDomainError, "half_isd must be positive");

  const int k = static_cast<int>(rings);
  // Lattice basis with inter-site distance 2*half_isd.
  const double a1x = 2.0 * half_isd, a1y = 0.0;
  const double a2x = half_isd, a2y = std::numbers::sqrt3 * half_isd;

  // Supercell period (k+1)*a1 + k*a2; its 60-degree rotation is the second
  // period, and the patch of hex radius k is a fundamental domain.
  const double t1x = (k + 1) * a1x + k * a2x;
  const double t1y = (k + 1) * a1y + k * a2y;
  const double width = std::hypot(t1x, t1y);
  const double angle = std::atan2(t1y, t1x);
  const double c = std::cos(-angle), s = std::sin(-angle);

  TorusRegion region(width, width * std::numbers::sqrt3 / 2.0, width / 2.0);
  const Point centre{(region.width() + region.skew()) / 2.0, region.height() / 2.0};

  NetworkLayout layout{region, {}, LayoutModel::kHexagonal, hexagonal_density(half_isd), seed,
                       half_isd, 0};
  layout.stations.reserve(1 + 3 * rings * (rings + 1));
  for (int ring = 0; ring <= k; ++ring) {
    for (int i = -k; i <= k; ++i) {
      for (int j = -k; j <= k; ++j) {
        if (std::max({std::abs(i), std::abs(j), std::abs(i + j)}) != ring) continue;
        const double x = i * a1x + j * a2x;
        const double y = i * a1y + j * a2y;
        layout.stations.push_back(
            region.wrap({centre.x + c * x - s * y, centre.y + s * x + c * y}));
      }
    }
  }
  return layout;
}

NetworkLayout generate_poisson(const TorusRegion& region, double density, std::uint64_t seed) {
  if (!(density > 0.0) || !std::isfinite(density)) {
    throw Error(ErrorKind::kDomainError, "density must be positive");
  }
  constexpr unsigned kMaxRedraws = 10000;
  const double mean = density * region.area();
  for (unsigned attempt = 0; attempt < kMaxRedraws; ++attempt) {
    Rng rng(sub_seed(seed, attempt));
    const auto count = rng.poisson(mean);
    if (count == 0) continue;
    NetworkLayout layout{region, {}, LayoutModel::kPoisson, density, seed,
                         half_isd_for_density(density), attempt};
    layout.stations.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
      const double x = rng.uniform(0.0, region.width());
      const double y = rng.uniform(0.0, region.height());
      layout.stations.push_back({x, y});
    }
    return layout;
  }
  throw Error(ErrorKind::kInsufficientStations, "every Poisson draw was empty");
}

TorusRegion region_for_expected_count(double half_isd, double expected_count) {
  if (!(expected_count > 0.0)) {
    throw Error(ErrorKind::kDomainError, "expected station count must be positive");
  }
  if (!(half_isd > 0.0)) throw Error(ErrorKind::kDomainError, "half_isd must be positive");
  const double side = std::sqrt(expected_count / hexagonal_density(half_isd));
  return TorusRegion(side, side);
}

void write_layout_csv(std::ostream& out, const NetworkLayout& layout, std::string_view digest) {
  write_comment(out, "model", to_string(layout.model));
  write_comment(out, "seed", std::to_string(layout.seed));
  write_comment(out, "density", layout.density);
  write_comment(out, "width", layout.region.width());
  write_comment(out, "height", layout.region.height());
  write_comment(out, "skew", layout.region.skew());
  write_comment(out, "half_isd", layout.half_isd);
  write_comment(out, "redraws", std::to_string(layout.redraws));
  write_comment(out, "digest", digest);
  out << "bs_id,x,y\n";
  for (std::size_t i = 0; i < layout.stations.size(); ++i) {
    out << i << ',' << format_double(layout.stations[i].x) << ','
        << format_double(layout.stations[i].y) << '\n';
  }
}

}  // namespace fluidnet
