#include "fluidnet/csv.hpp"

#include <charconv>
#include <cmath>

namespace fluidnet {

std::string format_double(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

void write_comment(std::ostream& out, std::string_view key, std::string_view value) {
  out << "# " << key << '=' << value << '\n';
}

void write_comment(std::ostream& out, std::string_view key, double value) {
  write_comment(out, key, format_double(value));
}

void write_row(std::ostream& out, std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << format_double(values[i]);
  }
  out << '\n';
}

}  // namespace fluidnet
