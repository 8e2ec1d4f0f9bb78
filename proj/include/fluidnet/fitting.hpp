#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "fluidnet/error.hpp"
#include "fluidnet/fluid.hpp"

namespace fluidnet {

/// Anything with a CDF over dB and its quantile function.
template <typename T>
concept CdfCurve = requires(const T& curve, double x) {
  { curve.evaluate(x) } -> std::convertible_to<double>;
  { curve.quantile(x) } -> std::convertible_to<double>;
};

/// {0.02, 0.04, ..., 0.98}.
std::vector<double> default_shift_grid();

/// Mean over p of reference.quantile(p) - target.quantile(p). Positive when
/// the reference curve lies to the right of the target.
template <CdfCurve Reference, CdfCurve Target>
double mean_horizontal_shift(const Reference& reference, const Target& target,
                             std::span<const double> p_grid) {
  if (p_grid.empty()) throw Error(ErrorKind::kDomainError, "empty probability grid");
  double sum = 0.0;
  for (double p : p_grid) sum += reference.quantile(p) - target.quantile(p);
  return sum / static_cast<double>(p_grid.size());
}

struct ShiftFit {
  std::vector<double> etas;
  std::vector<double> shifts_db;
  FitCoefficients coefficients;
  double rms_residual_db = 0.0;
};

/// Ordinary least squares shift = a*eta + b. kDegenerateFit when fewer than
/// two points or all etas equal; kDomainError on length mismatch.
ShiftFit fit_linear(std::span<const double> etas, std::span<const double> shifts_db);

/// Pearson correlation. kZeroVariance if either input is constant.
double correlation_coefficient(std::span<const double> xs, std::span<const double> ys);

/// Uniform dB grid of `points` values spanning the union of both curves'
/// 1%-99% quantile ranges.
template <CdfCurve A, CdfCurve B>
std::vector<double> joint_db_grid(const A& a, const B& b, std::size_t points = 200) {
  const double lo = std::min(a.quantile(0.01), b.quantile(0.01));
  const double hi = std::max(a.quantile(0.99), b.quantile(0.99));
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

/// Correlation of the two CDF curves sampled on joint_db_grid().
template <CdfCurve A, CdfCurve B>
double cdf_curve_correlation(const A& fitted_fluid, const B& poisson, std::size_t points = 200) {
  const auto grid = joint_db_grid(fitted_fluid, poisson, points);
  std::vector<double> xs, ys;
  xs.reserve(points);
  ys.reserve(points);
  for (double g : grid) {
    xs.push_back(fitted_fluid.evaluate(g));
    ys.push_back(poisson.evaluate(g));
  }
  return correlation_coefficient(xs, ys);
}

/// `eta,mean_shift_db,predicted_shift_db,residual_db` plus a
/// `# a=..., b=..., rms=...` footer.
void write_fit_csv(std::ostream& out, const ShiftFit& fit, std::string_view digest);

}  // namespace fluidnet
