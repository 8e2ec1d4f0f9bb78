#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "fluidnet/config.hpp"

namespace fluidnet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

struct CommandContext {
  ExperimentConfig config;
  std::optional<std::filesystem::path> out_dir;
  bool export_samples = false;
  std::ostream* data_out = nullptr;  // stdout for data when no out_dir
  std::ostream* log = nullptr;       // progress, stderr
};

/// Each command validates the config, runs, and maps failures to exit codes:
/// 0 success, 2 configuration error, 3 runtime or simulation error.
int cmd_generate(const CommandContext& context);
int cmd_cdf(const CommandContext& context);
int cmd_fit(const CommandContext& context);
int cmd_report(const CommandContext& context);

}  // namespace fluidnet
