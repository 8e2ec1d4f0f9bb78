// Times the reference SINR routine against the batched kernel, serial and
// OpenMP, on one Poisson layout.
//   sinr_bench [users] [repeats]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <vector>

#include <omp.h>

#include "fluidnet/placement.hpp"
#include "fluidnet/sinr.hpp"
#include "fluidnet/sinr_kernel.hpp"

using namespace fluidnet;

namespace {

template <typename F>
double time_ms(int repeats, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t users_count = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 20000;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;

  const TorusRegion region = region_for_expected_count(1.0, 50.0);
  const NetworkLayout layout = generate_poisson(region, hexagonal_density(1.0), 7);
  const UserSet users = draw_users(region, users_count, 11, 0.01);
  std::vector<Point> clamped;
  for (Point u : users.points) clamped.push_back(clamp_to_exclusion(layout, u, 0.01));

  const std::vector<double> etas = {2.2, 2.4, 2.6, 2.8, 3.0, 3.2, 3.4, 3.6, 3.8, 4.0, 4.2};
  KernelParams params{etas, 1.0, 1.0, 0.0, 0.01};
  std::vector<double> reference(etas.size() * users_count);
  std::vector<double> serial(reference.size()), parallel(reference.size());

  const double t_ref = time_ms(repeats, [&] {
    for (std::size_t e = 0; e < etas.size(); ++e) {
      PropagationModel model{1.0, etas[e], 1.0, 0.0};
      for (std::size_t u = 0; u < users_count; ++u) {
        reference[e * users_count + u] = sinr(layout, model, clamped[u]);
      }
    }
  });
  const double t_serial = time_ms(repeats, [&] {
    evaluate_layout(layout, users.points, params, serial, ExecutionMode::kSerial);
  });
  const double t_parallel = time_ms(repeats, [&] {
    evaluate_layout(layout, users.points, params, parallel, ExecutionMode::kParallel);
  });

  double max_rel = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    max_rel = std::max(max_rel, std::abs(serial[i] - reference[i]) / reference[i]);
  }
  const bool identical = serial == parallel;

  std::cout << "stations " << layout.stations.size() << ", users " << users_count << ", etas "
            << etas.size() << ", threads " << omp_get_max_threads() << '\n'
            << "reference (per-eta sinr)  " << t_ref << " ms\n"
            << "kernel serial             " << t_serial << " ms\n"
            << "kernel openmp             " << t_parallel << " ms\n"
            << "max relative diff kernel vs reference " << max_rel << '\n'
            << "serial == openmp bitwise  " << (identical ? "yes" : "no") << '\n';
  return identical && max_rel < 1e-12 ? 0 : 1;
}
