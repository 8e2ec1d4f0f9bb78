#include "fluidnet/ecdf.hpp"

#include <algorithm>
#include <cmath>

#include "fluidnet/error.hpp"
#include "fluidnet/monte_carlo.hpp"

namespace fluidnet {

double to_db(double linear) { return 10.0 * std::log10(linear); }
double from_db(double db) { return std::pow(10.0, db / 10.0); }

EmpiricalCdf::EmpiricalCdf(std::vector<double> values_db) : sorted_(std::move(values_db)) {
  if (sorted_.empty()) throw Error(ErrorKind::kEmptySample, "CDF of an empty sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::evaluate(double x_db) const {
  const auto count = std::upper_bound(sorted_.begin(), sorted_.end(), x_db) - sorted_.begin();
  return static_cast<double>(count) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::kDomainError, "quantile needs 0 < p < 1");
  const double position = p * static_cast<double>(sorted_.size() - 1);
  const auto lower = static_cast<std::size_t>(std::floor(position));
  if (lower + 1 >= sorted_.size()) return sorted_.back();
  const double frac = position - static_cast<double>(lower);
  return sorted_[lower] + frac * (sorted_[lower + 1] - sorted_[lower]);
}

EmpiricalCdf empirical_cdf(const SinrSampleSet& samples) {
  std::vector<double> db;
  db.reserve(samples.samples.size());
  for (double s : samples.samples) db.push_back(to_db(s));
  return EmpiricalCdf(std::move(db));
}

double outage_probability(const EmpiricalCdf& cdf, double threshold_db) {
  return cdf.evaluate(threshold_db);
}

}  // namespace fluidnet
