#include "fluidnet/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "fluidnet/csv.hpp"
#include "fluidnet/error.hpp"

namespace fluidnet {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw Error(ErrorKind::kConfigError,
              "invalid value '" + std::string(value) + "' for " + std::string(key));
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    bad_value(key, text);
  }
  return value;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) bad_value(key, text);
  return value;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

struct Field {
  std::string_view key;
  std::function<void(ExperimentConfig&, std::string_view)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

template <typename T>
Field double_field(std::string_view key, T ExperimentConfig::*member) {
  return {key, [=](ExperimentConfig& c, std::string_view v) { c.*member = parse_double(key, v); },
          [=](const ExperimentConfig& c) { return format_double(c.*member); }};
}

template <typename T>
Field unsigned_field(std::string_view key, T ExperimentConfig::*member) {
  return {key,
          [=](ExperimentConfig& c, std::string_view v) {
            const auto value = parse_unsigned(key, v);
            if (value > std::numeric_limits<T>::max()) bad_value(key, v);
            c.*member = static_cast<T>(value);
          },
          [=](const ExperimentConfig& c) { return std::to_string(c.*member); }};
}

Field list_field(std::string_view key, std::vector<double> ExperimentConfig::*member) {
  return {key, [=](ExperimentConfig& c, std::string_view v) { c.*member = parse_double_list(v); },
          [=](const ExperimentConfig& c) { return join(c.*member); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f{
        double_field("half_isd", &ExperimentConfig::half_isd),
        double_field("expected_stations", &ExperimentConfig::expected_stations),
        list_field("eta_list", &ExperimentConfig::eta_list),
        unsigned_field("runs", &ExperimentConfig::runs),
        unsigned_field("users", &ExperimentConfig::users),
        unsigned_field("seed", &ExperimentConfig::seed),
        double_field("exclusion", &ExperimentConfig::exclusion),
        double_field("density_scale", &ExperimentConfig::density_scale),
        double_field("noise_w", &ExperimentConfig::noise_w),
        double_field("tx_power_w", &ExperimentConfig::tx_power_w),
        double_field("path_gain_k", &ExperimentConfig::path_gain_k),
        unsigned_field("rings", &ExperimentConfig::rings),
        unsigned_field("hex_users", &ExperimentConfig::hex_users),
        Field{"fluid_cell",
              [](ExperimentConfig& c, std::string_view v) {
                v = trim(v);
                if (v == "equal-area") {
                  c.fluid_cell = CellExtent::kEqualArea;
                } else if (v == "inscribed") {
                  c.fluid_cell = CellExtent::kInscribedDisk;
                } else {
                  bad_value("fluid_cell", v);
                }
              },
              [](const ExperimentConfig& c) { return std::string(to_string(c.fluid_cell)); }},
        double_field("fit_a", &ExperimentConfig::fit_a),
        double_field("fit_b", &ExperimentConfig::fit_b),
        list_field("outage_thresholds_db", &ExperimentConfig::outage_thresholds_db),
        unsigned_field("curve_points", &ExperimentConfig::curve_points),
        Field{"model",
              [](ExperimentConfig& c, std::string_view v) { c.model = parse_model(trim(v)); },
              [](const ExperimentConfig& c) { return std::string(to_string(c.model)); }},
    };
    std::sort(f.begin(), f.end(), [](const Field& a, const Field& b) { return a.key < b.key; });
    return f;
  }();
  return table;
}

}  // namespace

std::string_view to_string(ModelChoice model) {
  switch (model) {
    case ModelChoice::kPoisson: return "poisson";
    case ModelChoice::kHex: return "hex";
    case ModelChoice::kFluid: return "fluid";
  }
  return "poisson";
}

ModelChoice parse_model(std::string_view text) {
  if (text == "poisson") return ModelChoice::kPoisson;
  if (text == "hex" || text == "hexagonal") return ModelChoice::kHex;
  if (text == "fluid") return ModelChoice::kFluid;
  bad_value("model", text);
}

double ExperimentConfig::effective_half_isd() const { return half_isd / std::sqrt(density_scale); }

void ExperimentConfig::validate() const {
  auto require = [](bool ok, const char* message) {
    if (!ok) throw Error(ErrorKind::kConfigError, message);
  };
  require(half_isd > 0.0, "half_isd must be > 0");
  require(expected_stations > 0.0, "expected_stations must be > 0");
  require(!eta_list.empty(), "eta_list is empty");
  for (double eta : eta_list) require(eta > 2.0, "every eta must exceed 2");
  require(runs >= 1, "runs must be >= 1");
  require(users >= 1, "users must be >= 1");
  require(exclusion > 0.0 && exclusion < 1.0, "exclusion must lie in (0, 1)");
  require(density_scale > 0.0, "density_scale must be > 0");
  require(noise_w >= 0.0, "noise_w must be >= 0");
  require(tx_power_w > 0.0, "tx_power_w must be > 0");
  require(path_gain_k > 0.0, "path_gain_k must be > 0");
  require(rings >= 1, "rings must be >= 1");
  require(hex_users >= 1, "hex_users must be >= 1");
  require(curve_points >= 2, "curve_points must be >= 2");
}

void set_config_value(ExperimentConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  for (const auto& field : fields()) {
    if (field.key == key) {
      field.set(config, value);
      return;
    }
  }
  throw Error(ErrorKind::kConfigError, "unknown config key '" + std::string(key) + "'");
}

void apply_config_text(ExperimentConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::kConfigError,
                  "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    set_config_value(config, line.substr(0, eq), line.substr(eq + 1));
  }
}

void apply_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kConfigError, "cannot read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(config, buffer.str());
}

std::vector<double> parse_double_list(std::string_view text) {
  text = trim(text);
  std::vector<double> values;
  if (text.find(':') != std::string_view::npos) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) bad_value("range", text);
    const double start = parse_double("range", text.substr(0, c1));
    const double stop = parse_double("range", text.substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_double("range", text.substr(c2 + 1));
    if (!(step > 0.0) || stop < start) bad_value("range", text);
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      values.push_back(std::round((start + step * static_cast<double>(i)) * 1e12) / 1e12);
    }
    return values;
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    values.push_back(parse_double("list", text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (values.empty()) bad_value("list", text);
  return values;
}

std::string canonical_text(const ExperimentConfig& config) {
  std::string out;
  for (const auto& field : fields()) {
    out += field.key;
    out += " = ";
    out += field.get(config);
    out += '\n';
  }
  return out;
}

std::string config_digest(const ExperimentConfig& config) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_text(config)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace fluidnet
