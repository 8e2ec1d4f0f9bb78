#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fluidnet {

struct SinrSampleSet;

double to_db(double linear);
double from_db(double db);

/// Step CDF F(x) = #{s <= x} / n over dB values.
class EmpiricalCdf {
 public:
  /// Takes values already in dB. kEmptySample if empty.
  explicit EmpiricalCdf(std::vector<double> values_db);

  double evaluate(double x_db) const;

  /// Linear interpolation between order statistics at position p*(n-1).
  /// kDomainError unless 0 < p < 1.
  double quantile(double p) const;

  std::size_t size() const { return sorted_.size(); }
  std::span<const double> sorted_values_db() const { return sorted_; }
  double min() const { return sorted_.front(); }
  double max() const { return sorted_.back(); }

 private:
  std::vector<double> sorted_;
};

/// CDF of 10*log10 of the pooled samples.
EmpiricalCdf empirical_cdf(const SinrSampleSet& samples);

double outage_probability(const EmpiricalCdf& cdf, double threshold_db);

}  // namespace fluidnet
