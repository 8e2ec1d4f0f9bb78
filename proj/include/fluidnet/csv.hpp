#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace fluidnet {

/// Shortest decimal string that round-trips the double; locale independent.
std::string format_double(double value);

/// Writes `# key=value\n`.
void write_comment(std::ostream& out, std::string_view key, std::string_view value);
void write_comment(std::ostream& out, std::string_view key, double value);

void write_row(std::ostream& out, std::span<const double> values);

/// `sinr_db,probability` rows for each grid abscissa.
template <typename Curve>
void write_cdf_csv(std::ostream& out, const Curve& curve, std::span<const double> grid_db,
                   std::string_view digest) {
  write_comment(out, "digest", digest);
  out << "sinr_db,probability\n";
  for (double g : grid_db) {
    const double row[] = {g, curve.evaluate(g)};
    write_row(out, row);
  }
}

}  // namespace fluidnet
