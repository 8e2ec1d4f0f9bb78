#include <cmath>
#include <vector>

#include "doctest.h"
#include "fluidnet/error.hpp"
#include "fluidnet/rng.hpp"
#include "fluidnet/sinr.hpp"
#include "fluidnet/sinr_kernel.hpp"
#include "support/oracles.hpp"

using namespace fluidnet;

namespace {

NetworkLayout make_layout(TorusRegion region, std::vector<Point> stations) {
  return {region, std::move(stations), LayoutModel::kPoisson, 1.0, 0, 1.0, 0};
}

NetworkLayout random_layout(Rng& rng, const TorusRegion& region, std::size_t n) {
  std::vector<Point> stations;
  for (std::size_t i = 0; i < n; ++i) {
    stations.push_back({rng.uniform(0, region.width()), rng.uniform(0, region.height())});
  }
  return make_layout(region, std::move(stations));
}

// Direct summation over 9-image distances, sharing nothing with the library.
double brute_force_sinr(const NetworkLayout& layout, double k, double eta, double power,
                        double noise, Point u) {
  const auto& r = layout.region;
  std::vector<double> d;
  for (Point s : layout.stations) {
    d.push_back(oracle::image_distance(u.x, u.y, s.x, s.y, r.width(), r.height(), r.skew()));
  }
  std::size_t serving = 0;
  for (std::size_t j = 1; j < d.size(); ++j) {
    if (d[j] < d[serving]) serving = j;
  }
  double interference = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j != serving) interference += power * k * std::pow(d[j], -eta);
  }
  return power * k * std::pow(d[serving], -eta) / (interference + noise);
}

}  // namespace

TEST_CASE("path gain") {
  CHECK(path_gain({1.0, 2.0}, 1.0) == 1.0);
  CHECK(path_gain({1.0, 4.0}, 2.0) == 0.0625);
  CHECK(path_gain({3.0, 3.5}, 1.7) == doctest::Approx(0.4683278987466134).epsilon(1e-12));
  for (double d : {0.0, -1.0}) {
    try {
      path_gain({1.0, 3.0}, d);
      FAIL("accepted non-positive distance");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kNonPositiveDistance);
    }
  }
}

TEST_CASE("best server") {
  const TorusRegion region(10, 10);
  const auto layout =
      make_layout(region, {{1, 1}, {5, 5}, {8, 2}, {3, 7}, {5, 9}, {9, 9}});
  CHECK(best_server(layout, {3, 7}) == 3);
  // Stations 1 and 4 both sit 2 away from (5, 7).
  CHECK(best_server(layout, {5, 7}) == 1);

  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const auto random = random_layout(rng, region, 5);
    const Point u{rng.uniform(0, 10), rng.uniform(0, 10)};
    std::size_t expected = 0;
    double best = INFINITY;
    for (std::size_t j = 0; j < 5; ++j) {
      const double d = oracle::image_distance(u.x, u.y, random.stations[j].x,
                                              random.stations[j].y, 10, 10);
      if (d < best) {
        best = d;
        expected = j;
      }
    }
    CHECK(best_server(random, u) == expected);
  }
}

TEST_CASE("sinr examples") {
  const TorusRegion region(100, 100);
  SUBCASE("equidistant pair is 0 dB") {
    const auto layout = make_layout(region, {{40, 50}, {60, 50}});
    for (double eta : {2.5, 3.0, 4.0}) {
      CHECK(sinr(layout, {1.0, eta}, {50, 50}) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  SUBCASE("serving at 1, interferers at 2 and 4") {
    const auto layout = make_layout(region, {{51, 50}, {50, 52}, {46, 50}});
    // by hand: 1 / (1/4 + 1/16).
    // Models require eta > 2; the next double above 2 stands in for eta = 2.
    const PropagationModel eta2{1.0, std::nextafter(2.0, 3.0)};
    CHECK(sinr(layout, eta2, {50, 50}) == doctest::Approx(3.2).epsilon(1e-12));

    const double base = sinr(layout, {1.0, 3.0, 1.0}, {50, 50});
    CHECK(sinr(layout, {10.0, 3.0, 10.0}, {50, 50}) == doctest::Approx(base).epsilon(1e-12));
  }

  SUBCASE("single station without noise") {
    const auto layout = make_layout(region, {{10, 10}});
    try {
      sinr(layout, {1.0, 3.0}, {20, 20});
      FAIL("single station accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kNoInterference);
    }
    // With thermal noise the ratio is defined.
    CHECK(sinr(layout, {1.0, 3.0, 1.0, 1e-3}, {20, 20}) > 0.0);
  }
}

TEST_CASE("sinr matches brute-force summation on micro layouts") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const TorusRegion region(rng.uniform(2, 10), rng.uniform(2, 10),
                             trial % 3 == 0 ? rng.uniform(0, 2) : 0.0);
    const auto layout = random_layout(rng, region, 5);
    const Point u{rng.uniform(0, region.width()), rng.uniform(0, region.height())};
    const double eta = rng.uniform(2.1, 4.5);
    const double k = rng.uniform(0.1, 10), power = rng.uniform(0.1, 10);
    const double noise = trial % 2 ? rng.uniform(0, 1e-2) : 0.0;
    const double expected = brute_force_sinr(layout, k, eta, power, noise, u);
    CHECK(sinr(layout, {k, eta, power, noise}, u) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("sinr invariants") {
  Rng rng(8);
  const TorusRegion region(12, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto layout = random_layout(rng, region, 8);
    const Point u{rng.uniform(0, 12), rng.uniform(0, 9)};
    const PropagationModel model{1.0, rng.uniform(2.2, 4.2)};
    const double base = sinr(layout, model, u);

    // Uniform scaling of every length.
    const double lambda = rng.uniform(0.05, 20);
    auto scaled = layout;
    scaled.region = TorusRegion(12 * lambda, 9 * lambda);
    for (auto& s : scaled.stations) s = {s.x * lambda, s.y * lambda};
    CHECK(sinr(scaled, model, {u.x * lambda, u.y * lambda}) ==
          doctest::Approx(base).epsilon(1e-10));

    // Joint translation on the torus.
    const double tx = rng.uniform(-30, 30), ty = rng.uniform(-30, 30);
    auto shifted = layout;
    for (auto& s : shifted.stations) s = region.wrap({s.x + tx, s.y + ty});
    CHECK(sinr(shifted, model, region.wrap({u.x + tx, u.y + ty})) ==
          doctest::Approx(base).epsilon(1e-10));

    // P and K rescaled together.
    const double c = rng.uniform(0.01, 100);
    CHECK(sinr(layout, {c, model.path_loss_exponent, 1.0 / c}, u) ==
          doctest::Approx(base).epsilon(1e-12));

    // An extra station farther than the server can only add interference.
    auto more = layout;
    more.stations.push_back({rng.uniform(0, 12), rng.uniform(0, 9)});
    if (best_server(more, u) == best_server(layout, u)) CHECK(sinr(more, model, u) <= base);
  }
}

TEST_CASE("adding an interferer never raises SINR for a fixed server") {
  Rng rng(81);
  const TorusRegion region(10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    auto layout = random_layout(rng, region, 6);
    const Point u = layout.stations[0];
    const Point user{u.x + 0.01, u.y};  // keeps station 0 as server
    const PropagationModel model{1.0, 3.3};
    const double before = sinr(layout, model, user);
    Point extra{rng.uniform(0, 10), rng.uniform(0, 10)};
    if (region.distance(extra, user) < 0.02) continue;
    layout.stations.push_back(extra);
    CHECK(sinr(layout, model, user) < before);
  }
}

TEST_CASE("exclusion clamp") {
  const TorusRegion region(10, 10);
  const auto layout = make_layout(region, {{5, 5}, {1, 1}});
  const Point moved = clamp_to_exclusion(layout, {5.003, 5.004}, 0.01);
  CHECK(region.distance(moved, {5, 5}) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(moved.x > 5.0);
  CHECK(moved.y > 5.0);
  CHECK(clamp_to_exclusion(layout, {6, 6}, 0.01) == Point{6, 6});
  const Point on_top = clamp_to_exclusion(layout, {5, 5}, 0.01);
  CHECK(on_top.x == doctest::Approx(5.01));
  CHECK(on_top.y == 5.0);
  // Clamp across the wrap seam.
  const auto edge = make_layout(region, {{0.001, 5}, {5, 5}});
  const Point wrapped = clamp_to_exclusion(edge, {9.9995, 5}, 0.01);
  CHECK(region.distance(wrapped, {0.001, 5}) == doctest::Approx(0.01).epsilon(1e-9));
}
