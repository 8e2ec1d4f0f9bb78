#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string_view>

namespace fluidnet {

/// Closed-form fluid network: a continuum of interferers of density
/// `density` beyond 2*half_isd from the serving station.
struct FluidModel {
  double half_isd = 1.0;
  double density = 0.0;
  double eta = 3.0;

  /// Density tied to half_isd as in a hexagonal network.
  static FluidModel from_half_isd(double half_isd, double eta);

  void validate() const;
};

/// Line `shift_db = a * eta + b` mapping fluid SINR (dB) onto Poisson SINR.
struct FitCoefficients {
  double a = 3.0;
  double b = -6.0;

  double shift_db(double eta) const { return a * eta + b; }
};

/// Outer boundary of the serving cell over which users are averaged.
///   kInscribedDisk: radius half_isd.
///   kEqualArea: disk of area 1/density, the area each station covers.
enum class CellExtent { kInscribedDisk, kEqualArea };

std::string_view to_string(CellExtent extent);

/// Annulus inner_radius <= r <= outer_radius with uniform users.
struct FluidCell {
  double inner_radius = 0.0;
  double outer_radius = 1.0;
};

FluidCell make_cell(const FluidModel& model, double exclusion, CellExtent extent);

/// SINR at distance r from the serving station; 0 < r < 2*half_isd.
double fluid_sinr(const FluidModel& model, double r);

/// Density-free form in x = r / half_isd; 0 < x < 2.
double normalized_sinr(double eta, double x);

/// fluid_sinr in dB minus fit.shift_db(eta).
double fitted_sinr_db(const FluidModel& model, double r, const FitCoefficients& fit);

/// Radius r in [lo, hi] where 10*log10(fluid_sinr(r)) = gamma_db, by bisection
/// (relative tolerance 1e-12 on r, at most 200 steps). Values outside the
/// bracket return the nearer end.
double radius_for_sinr_db(const FluidModel& model, double gamma_db, double lo, double hi);

/// P(10*log10(gamma(r)) <= gamma_db) for r uniform over the cell area.
double fluid_cdf(const FluidModel& model, double gamma_db, const FluidCell& cell);
double fluid_cdf(const FluidModel& model, double gamma_db, double exclusion,
                 CellExtent extent = CellExtent::kEqualArea);

/// Inverse of fluid_cdf in closed form (users uniform in area).
double fluid_quantile_db(const FluidModel& model, double p, const FluidCell& cell);

/// log2(1 + gamma); kDomainError for gamma < 0.
double spectral_efficiency(double gamma);

/// Spectral efficiency at r = half_isd.
double cell_edge_throughput(const FluidModel& model);

/// Area average of f(r) over the cell, weight 2r / (outer^2 - inner^2).
/// Adaptive Gauss-Kronrod, relative tolerance 1e-9.
double cell_average(const FluidCell& cell, const std::function<double(double)>& f);

double average_cell_throughput(const FluidModel& model, double exclusion,
                               CellExtent extent = CellExtent::kEqualArea);

/// Fluid SINR CDF as a curve object, optionally shifted left by offset_db
/// (the fitted fluid model uses offset_db = a*eta + b).
class FluidCdf {
 public:
  FluidCdf(const FluidModel& model, const FluidCell& cell, double offset_db = 0.0);

  double evaluate(double gamma_db) const;
  double quantile(double p) const;

  const FluidModel& model() const { return model_; }
  const FluidCell& cell() const { return cell_; }
  double offset_db() const { return offset_db_; }

 private:
  FluidModel model_;
  FluidCell cell_;
  double offset_db_;
};

/// `r_over_Rc,sinr_db,cdf,spectral_efficiency` on a geometric r grid from the
/// inner to the outer cell radius.
void write_fluid_curve_csv(std::ostream& out, const FluidModel& model, const FluidCell& cell,
                           std::size_t points, std::string_view digest);

}  // namespace fluidnet
