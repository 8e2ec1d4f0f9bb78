#include "fluidnet/fitting.hpp"

#include <cmath>
#include <numeric>
#include <ostream>

#include "fluidnet/csv.hpp"

namespace fluidnet {

std::vector<double> default_shift_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 49; ++i) grid.push_back(0.02 * i);
  return grid;
}

ShiftFit fit_linear(std::span<const double> etas, std::span<const double> shifts_db) {
  if (etas.size() != shifts_db.size()) {
    throw Error(ErrorKind::kDomainError, "eta and shift lists differ in length");
  }
  if (etas.size() < 2) throw Error(ErrorKind::kDegenerateFit, "need at least two points");
  const auto n = static_cast<double>(etas.size());
  const double mean_x = std::accumulate(etas.begin(), etas.end(), 0.0) / n;
  const double mean_y = std::accumulate(shifts_db.begin(), shifts_db.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    sxx += (etas[i] - mean_x) * (etas[i] - mean_x);
    sxy += (etas[i] - mean_x) * (shifts_db[i] - mean_y);
  }
  if (sxx == 0.0) throw Error(ErrorKind::kDegenerateFit, "all etas are equal");

  ShiftFit fit;
  fit.etas.assign(etas.begin(), etas.end());
  fit.shifts_db.assign(shifts_db.begin(), shifts_db.end());
  fit.coefficients.a = sxy / sxx;
  fit.coefficients.b = mean_y - fit.coefficients.a * mean_x;
  double ss = 0.0;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    const double r = shifts_db[i] - fit.coefficients.shift_db(etas[i]);
    ss += r * r;
  }
  fit.rms_residual_db = std::sqrt(ss / n);
  return fit;
}

double correlation_coefficient(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw Error(ErrorKind::kDomainError, "lengths differ");
  if (xs.size() < 2) throw Error(ErrorKind::kDomainError, "need at least two values");
  const auto n = static_cast<double>(xs.size());
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error(ErrorKind::kZeroVariance, "constant input");
  return std::clamp(sxy / (std::sqrt(sxx) * std::sqrt(syy)), -1.0, 1.0);
}

void write_fit_csv(std::ostream& out, const ShiftFit& fit, std::string_view digest) {
  write_comment(out, "digest", digest);
  out << "eta,mean_shift_db,predicted_shift_db,residual_db\n";
  for (std::size_t i = 0; i < fit.etas.size(); ++i) {
    const double predicted = fit.coefficients.shift_db(fit.etas[i]);
    const double row[] = {fit.etas[i], fit.shifts_db[i], predicted, fit.shifts_db[i] - predicted};
    write_row(out, row);
  }
  out << "# a=" << format_double(fit.coefficients.a) << ", b=" << format_double(fit.coefficients.b)
      << ", rms=" << format_double(fit.rms_residual_db) << '\n';
}

}  // namespace fluidnet
