#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "repairkit/metrics.hpp"

namespace repairkit {

/// Everything the CLI and the service can be configured with. Loadable from
/// a key=value file or a JSON object with the same field names; command-line
/// flags override file values, file values override these defaults.
struct ToolConfig {
  MetricConfig metric;
  double epsilon = 1e-4;   // advantage normalization stabilizer
  double clip_eps = 0.2;   // surrogate clipping threshold
  double beta = 1e-3;      // KL penalty coefficient
  double threshold = 0.5;  // semantic filter gate
  std::array<double, 3> ratios = {0.8, 0.1, 0.1};
  uint64_t seed = 0;

  void validate() const;
};

/// Parses file contents: JSON when the first non-space byte is '{',
/// "key=value" lines otherwise ('#' starts a comment). Unknown keys are
/// errors. Throws Error(invalid_input).
ToolConfig parse_config(std::string_view contents);

/// Applies one "key=value" assignment on top of an existing config.
void apply_config_entry(ToolConfig& config, std::string_view key,
                        std::string_view value);

/// Reads and parses a config file. Throws Error(io) when unreadable.
ToolConfig load_config_file(const std::string& path);

}  // namespace repairkit
