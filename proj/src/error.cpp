#include "fluidnet/error.hpp"

namespace fluidnet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInsufficientStations: return "InsufficientStations";
    case ErrorKind::kNonPositiveDistance: return "NonPositiveDistance";
    case ErrorKind::kNoInterference: return "NoInterference";
    case ErrorKind::kDomainError: return "DomainError";
    case ErrorKind::kEmptySample: return "EmptySample";
    case ErrorKind::kDegenerateFit: return "DegenerateFit";
    case ErrorKind::kZeroVariance: return "ZeroVariance";
    case ErrorKind::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace fluidnet
