#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "fluidnet/ecdf.hpp"
#include "fluidnet/error.hpp"
#include "fluidnet/fluid.hpp"
#include "fluidnet/rng.hpp"

using namespace fluidnet;

namespace {

// Radii with uniform users on the annulus, drawn by inverse transform.
std::vector<double> sample_radii(Rng& rng, const FluidCell& cell, std::size_t n) {
  const double a2 = cell.inner_radius * cell.inner_radius;
  const double b2 = cell.outer_radius * cell.outer_radius;
  std::vector<double> r(n);
  for (auto& v : r) v = std::sqrt(a2 + (b2 - a2) * rng.uniform());
  return r;
}

}  // namespace

TEST_CASE("fluid SINR examples") {
  const FluidModel eta4 = FluidModel::from_half_isd(1.0, 4.0);
  CHECK(eta4.density == doctest::Approx(std::numbers::sqrt3 / 6).epsilon(1e-15));
  CHECK(fluid_sinr(eta4, 1.0) == doctest::Approx(1.1026577908435842).epsilon(1e-12));
  const FluidModel eta3 = FluidModel::from_half_isd(1.0, 3.0);
  CHECK(fluid_sinr(eta3, 0.5) == doctest::Approx(6.615946745061505).epsilon(1e-12));

  for (double r : {0.0, -0.5, 2.0, 2.5}) {
    try {
      fluid_sinr(eta3, r);
      FAIL("r outside (0, 2R_c) accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kDomainError);
    }
  }
}

TEST_CASE("normalized SINR") {
  CHECK(normalized_sinr(4.0, 1.0) == doctest::Approx(1.1026577908435842).epsilon(1e-12));
  CHECK(to_db(normalized_sinr(4.0, 1.0)) == doctest::Approx(0.4244075).epsilon(1e-6));
  CHECK(normalized_sinr(3.0, 1.0) == doctest::Approx(3 / (std::numbers::sqrt3 * std::numbers::pi)));
  CHECK(normalized_sinr(3.0, 1.0) == doctest::Approx(normalized_sinr(4.0, 1.0) / 2));
  CHECK(normalized_sinr(2.0001, 0.7) < 1e-3);
  CHECK_THROWS_AS(normalized_sinr(3.0, 2.0), Error);
  CHECK_THROWS_AS(normalized_sinr(2.0, 1.0), Error);

  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double half_isd = std::exp(rng.uniform(-5, 5));
    const double x = rng.uniform(1e-3, 1.999);
    const double eta = rng.uniform(2.01, 5.0);
    const FluidModel model = FluidModel::from_half_isd(half_isd, eta);
    CHECK(fluid_sinr(model, x * half_isd) ==
          doctest::Approx(normalized_sinr(eta, x)).epsilon(1e-12));
  }
  for (double half_isd : {0.1, 1.0, 37.0}) {
    for (double x : {0.01, 0.5, 1.0, 1.5}) {
      CHECK(fluid_sinr(FluidModel::from_half_isd(half_isd, 3.3), x * half_isd) ==
            doctest::Approx(normalized_sinr(3.3, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("fluid SINR decreases with distance") {
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const FluidModel model = FluidModel::from_half_isd(1.0, rng.uniform(2.05, 5.0));
    double r1 = rng.uniform(1e-4, 1.0), r2 = rng.uniform(1e-4, 1.0);
    if (r1 == r2) continue;
    if (r1 > r2) std::swap(r1, r2);
    CHECK(fluid_sinr(model, r1) > fluid_sinr(model, r2));
  }
}

TEST_CASE("fitted SINR shift") {
  const FitCoefficients canonical{3.0, -6.0};
  const FluidModel m28 = FluidModel::from_half_isd(1.0, 2.8);
  const FluidModel m36 = FluidModel::from_half_isd(1.0, 3.6);
  CHECK(to_db(fluid_sinr(m28, 0.6)) - fitted_sinr_db(m28, 0.6, canonical) ==
        doctest::Approx(2.4).epsilon(1e-12));
  CHECK(to_db(fluid_sinr(m36, 0.6)) - fitted_sinr_db(m36, 0.6, canonical) ==
        doctest::Approx(4.8).epsilon(1e-12));
  CHECK(fitted_sinr_db(m36, 0.6, {0.0, 0.0}) == to_db(fluid_sinr(m36, 0.6)));
}

TEST_CASE("fluid CDF") {
  const FluidModel model = FluidModel::from_half_isd(1.0, 3.0);
  const double eps = 0.01;

  SUBCASE("end points of the inscribed cell") {
    // The edge is the minimum SINR and the exclusion radius the maximum.
    const double edge_db = to_db(fluid_sinr(model, 1.0));
    const double max_db = to_db(fluid_sinr(model, eps));
    CHECK(fluid_cdf(model, edge_db, eps, CellExtent::kInscribedDisk) == 0.0);
    CHECK(fluid_cdf(model, max_db, eps, CellExtent::kInscribedDisk) == 1.0);
    CHECK(fluid_cdf(model, edge_db - 50, eps, CellExtent::kInscribedDisk) == 0.0);
    CHECK(fluid_cdf(model, max_db + 50, eps, CellExtent::kInscribedDisk) == 1.0);
  }

  SUBCASE("equal-area cell radius") {
    const FluidCell cell = make_cell(model, eps, CellExtent::kEqualArea);
    CHECK(std::numbers::pi * cell.outer_radius * cell.outer_radius ==
          doctest::Approx(1.0 / model.density).epsilon(1e-12));
    CHECK(cell.inner_radius == doctest::Approx(0.01));
  }

  SUBCASE("against direct sampling of radii") {
    Rng rng(31);
    for (CellExtent extent : {CellExtent::kInscribedDisk, CellExtent::kEqualArea}) {
      for (double eta : {2.6, 3.5}) {
        const FluidModel m = FluidModel::from_half_isd(1.0, eta);
        const FluidCell cell = make_cell(m, eps, extent);
        std::vector<double> db;
        for (double r : sample_radii(rng, cell, 1'000'000)) db.push_back(to_db(fluid_sinr(m, r)));
        const EmpiricalCdf sampled(std::move(db));
        double sup = 0.0;
        const auto values = sampled.sorted_values_db();
        for (std::size_t i = 0; i < values.size(); i += 997) {
          sup = std::max(sup, std::abs(fluid_cdf(m, values[i], cell) - sampled.evaluate(values[i])));
        }
        CHECK(sup <= 0.005);
      }
    }
  }

  SUBCASE("monotone with limits 0 and 1") {
    const FluidCell cell = make_cell(model, eps, CellExtent::kEqualArea);
    double previous = 0.0;
    for (double g = -40.0; g <= 60.0; g += 0.05) {
      const double p = fluid_cdf(model, g, cell);
      CHECK(p >= previous);
      previous = p;
    }
    CHECK(fluid_cdf(model, -1e3, cell) == 0.0);
    CHECK(fluid_cdf(model, 1e3, cell) == 1.0);
  }

  SUBCASE("bisection round trip") {
    Rng rng(4);
    const FluidCell cell = make_cell(model, eps, CellExtent::kEqualArea);
    const double lo_db = to_db(fluid_sinr(model, cell.outer_radius));
    const double hi_db = to_db(fluid_sinr(model, cell.inner_radius));
    for (int i = 0; i < 1000; ++i) {
      const double g = rng.uniform(lo_db, hi_db);
      const double r = radius_for_sinr_db(model, g, cell.inner_radius, cell.outer_radius);
      CHECK(std::abs(to_db(fluid_sinr(model, r)) - g) <= 1e-9);
    }
  }

  SUBCASE("quantile inverts the CDF") {
    const FluidCell cell = make_cell(model, eps, CellExtent::kEqualArea);
    for (double p = 0.01; p < 1.0; p += 0.01) {
      CHECK(fluid_cdf(model, fluid_quantile_db(model, p, cell), cell) ==
            doctest::Approx(p).epsilon(1e-9));
    }
  }

  SUBCASE("shifted curve object") {
    const FluidCell cell = make_cell(model, eps, CellExtent::kEqualArea);
    const FluidCdf base(model, cell);
    const FluidCdf shifted(model, cell, 3.0);
    CHECK(shifted.quantile(0.3) == doctest::Approx(base.quantile(0.3) - 3.0));
    CHECK(shifted.evaluate(1.0) == doctest::Approx(base.evaluate(4.0)));
  }
}

TEST_CASE("spectral efficiency") {
  CHECK(spectral_efficiency(1.0) == 1.0);
  CHECK(spectral_efficiency(0.0) == 0.0);
  CHECK(spectral_efficiency(3.2) == doctest::Approx(2.070389327891398).epsilon(1e-12));
  try {
    spectral_efficiency(-0.1);
    FAIL("negative SINR accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDomainError);
  }
}

TEST_CASE("cell-edge throughput") {
  CHECK(cell_edge_throughput(FluidModel::from_half_isd(1.0, 4.0)) ==
        doctest::Approx(1.0722140694581683).epsilon(1e-12));
  CHECK(cell_edge_throughput(FluidModel::from_half_isd(1.0, 2.0001)) < 1e-3);
  for (double half_isd : {0.1, 3.0, 250.0}) {
    CHECK(cell_edge_throughput(FluidModel::from_half_isd(half_isd, 3.4)) ==
          doctest::Approx(cell_edge_throughput(FluidModel::from_half_isd(1.0, 3.4)))
              .epsilon(1e-12));
  }
}

TEST_CASE("average cell throughput") {
  const FluidModel model = FluidModel::from_half_isd(1.0, 3.5);
  for (CellExtent extent : {CellExtent::kInscribedDisk, CellExtent::kEqualArea}) {
    const FluidCell cell = make_cell(model, 0.01, extent);
    CHECK(cell_average(cell, [](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-12));

    const double average = average_cell_throughput(model, 0.01, extent);
    CHECK(average >= cell_edge_throughput(model));

    Rng rng(6);
    double sum = 0.0;
    const std::size_t n = 10'000'000;
    const double a2 = cell.inner_radius * cell.inner_radius;
    const double b2 = cell.outer_radius * cell.outer_radius;
    for (std::size_t i = 0; i < n; ++i) {
      sum += std::log2(1.0 + fluid_sinr(model, std::sqrt(a2 + (b2 - a2) * rng.uniform())));
    }
    const double sampled = sum / static_cast<double>(n);
    INFO("quadrature " << average << ", sampling " << sampled);
    CHECK(std::abs(average - sampled) / sampled < 5e-4);
  }
}

TEST_CASE("fluid curve export") {
  const FluidModel model = FluidModel::from_half_isd(1.0, 3.0);
  std::ostringstream out;
  write_fluid_curve_csv(out, model, make_cell(model, 0.01, CellExtent::kEqualArea), 512, "d");
  const std::string text = out.str();
  CHECK(text.find("r_over_Rc,sinr_db,cdf,spectral_efficiency\n") != std::string::npos);
  const auto header_end = text.find("spectral_efficiency\n") + 20;
  CHECK(std::count(text.begin() + static_cast<std::ptrdiff_t>(header_end), text.end(), '\n') == 512);
}
