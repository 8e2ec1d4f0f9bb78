#include "fluidnet/fluid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fluidnet/csv.hpp"
#include "fluidnet/ecdf.hpp"
#include "fluidnet/error.hpp"

namespace fluidnet {

FluidModel FluidModel::from_half_isd(double half_isd, double eta) {
  return {half_isd, std::numbers::sqrt3 / (6.0 * half_isd * half_isd), eta};
}

void FluidModel::validate() const {
  if (!(eta > 2.0)) throw Error(ErrorKind::kDomainError, "fluid model needs eta > 2");
  if (!(half_isd > 0.0)) throw Error(ErrorKind::kDomainError, "half_isd must be positive");
  if (!(density > 0.0)) throw Error(ErrorKind::kDomainError, "density must be positive");
}

std::string_view to_string(CellExtent extent) {
  return extent == CellExtent::kInscribedDisk ? "inscribed" : "equal-area";
}

FluidCell make_cell(const FluidModel& model, double exclusion, CellExtent extent) {
  model.validate();
  if (!(exclusion > 0.0 && exclusion < 1.0)) {
    throw Error(ErrorKind::kDomainError, "exclusion must lie in (0, 1)");
  }
  const double outer = extent == CellExtent::kInscribedDisk
                           ? model.half_isd
                           : 1.0 / std::sqrt(std::numbers::pi * model.density);
  const double inner = exclusion * model.half_isd;
  if (!(outer < 2.0 * model.half_isd) || !(inner < outer)) {
    throw Error(ErrorKind::kDomainError, "cell radius outside the fluid model's range");
  }
  return {inner, outer};
}

double fluid_sinr(const FluidModel& model, double r) {
  model.validate();
  const double edge = 2.0 * model.half_isd;
  if (!(r > 0.0) || !(r < edge)) {
    throw Error(ErrorKind::kDomainError, "fluid SINR needs 0 < r < 2*half_isd");
  }
  const double eta = model.eta;
  return (eta - 2.0) / (2.0 * std::numbers::pi * model.density) * std::pow(r, -eta) *
         std::pow(edge - r, eta - 2.0);
}

double normalized_sinr(double eta, double x) {
  if (!(eta > 2.0)) throw Error(ErrorKind::kDomainError, "normalized SINR needs eta > 2");
  if (!(x > 0.0) || !(x < 2.0)) {
    throw Error(ErrorKind::kDomainError, "normalized SINR needs 0 < x < 2");
  }
  return 6.0 / std::numbers::sqrt3 * (eta - 2.0) / (2.0 * std::numbers::pi) * std::pow(x, -eta) *
         std::pow(2.0 - x, eta - 2.0);
}

double fitted_sinr_db(const FluidModel& model, double r, const FitCoefficients& fit) {
  return to_db(fluid_sinr(model, r)) - fit.shift_db(model.eta);
}

double radius_for_sinr_db(const FluidModel& model, double gamma_db, double lo, double hi) {
  if (gamma_db >= to_db(fluid_sinr(model, lo))) return lo;
  if (gamma_db <= to_db(fluid_sinr(model, hi))) return hi;
  // SINR falls strictly with r on (0, 2*half_isd).
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-12 * lo; ++iter) {
    mid = 0.5 * (lo + hi);
    if (to_db(fluid_sinr(model, mid)) > gamma_db) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double fluid_cdf(const FluidModel& model, double gamma_db, const FluidCell& cell) {
  const double r = radius_for_sinr_db(model, gamma_db, cell.inner_radius, cell.outer_radius);
  const double outer2 = cell.outer_radius * cell.outer_radius;
  const double inner2 = cell.inner_radius * cell.inner_radius;
  return std::clamp((outer2 - r * r) / (outer2 - inner2), 0.0, 1.0);
}

double fluid_cdf(const FluidModel& model, double gamma_db, double exclusion, CellExtent extent) {
  return fluid_cdf(model, gamma_db, make_cell(model, exclusion, extent));
}

double fluid_quantile_db(const FluidModel& model, double p, const FluidCell& cell) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::kDomainError, "probability outside [0, 1]");
  const double outer2 = cell.outer_radius * cell.outer_radius;
  const double inner2 = cell.inner_radius * cell.inner_radius;
  const double r = std::sqrt(outer2 - p * (outer2 - inner2));
  return to_db(fluid_sinr(model, std::clamp(r, cell.inner_radius, cell.outer_radius)));
}

double spectral_efficiency(double gamma) {
  if (!(gamma >= 0.0)) throw Error(ErrorKind::kDomainError, "SINR must be >= 0");
  return std::log2(1.0 + gamma);
}

double cell_edge_throughput(const FluidModel& model) {
  return spectral_efficiency(fluid_sinr(model, model.half_isd));
}

double cell_average(const FluidCell& cell, const std::function<double(double)>& f) {
  const double norm =
      cell.outer_radius * cell.outer_radius - cell.inner_radius * cell.inner_radius;
  auto weighted = [&](double r) { return f(r) * 2.0 * r / norm; };
  using Integrator = boost::math::quadrature::gauss_kronrod<double, 61>;
  return Integrator::integrate(weighted, cell.inner_radius, cell.outer_radius, 20, 1e-9);
}

double average_cell_throughput(const FluidModel& model, double exclusion, CellExtent extent) {
  const FluidCell cell = make_cell(model, exclusion, extent);
  return cell_average(cell, [&](double r) { return spectral_efficiency(fluid_sinr(model, r)); });
}

FluidCdf::FluidCdf(const FluidModel& model, const FluidCell& cell, double offset_db)
    : model_(model), cell_(cell), offset_db_(offset_db) {
  model_.validate();
}

double FluidCdf::evaluate(double gamma_db) const {
  return fluid_cdf(model_, gamma_db + offset_db_, cell_);
}

double FluidCdf::quantile(double p) const {
  return fluid_quantile_db(model_, p, cell_) - offset_db_;
}

void write_fluid_curve_csv(std::ostream& out, const FluidModel& model, const FluidCell& cell,
                           std::size_t points, std::string_view digest) {
  if (points < 2) throw Error(ErrorKind::kDomainError, "curve needs at least two points");
  write_comment(out, "eta", model.eta);
  write_comment(out, "half_isd", model.half_isd);
  write_comment(out, "density", model.density);
  write_comment(out, "inner_radius", cell.inner_radius);
  write_comment(out, "outer_radius", cell.outer_radius);
  write_comment(out, "digest", digest);
  out << "r_over_Rc,sinr_db,cdf,spectral_efficiency\n";
  const double ratio = cell.outer_radius / cell.inner_radius;
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    const double r = i + 1 == points ? cell.outer_radius : cell.inner_radius * std::pow(ratio, t);
    const double gamma = fluid_sinr(model, r);
    const double row[] = {r / model.half_isd, to_db(gamma), fluid_cdf(model, to_db(gamma), cell),
                          spectral_efficiency(gamma)};
    write_row(out, row);
  }
}

}  // namespace fluidnet
