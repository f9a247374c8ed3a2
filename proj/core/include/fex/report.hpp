#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fex/group.hpp"
#include "fex/spectral.hpp"

namespace fex::report {

inline constexpr int kSchemaVersion = 1;

enum class Mode { bounds, alpha, chain, khinchin, sweep };

const char* to_string(Mode mode) noexcept;
/// Throws Error(config) for unknown names.
Mode parse_mode(std::string_view name);

struct InstanceConfig {
  Mode mode = Mode::bounds;
  std::vector<std::int64_t> group;
  std::vector<GroupElement> points;  // K
  std::size_t phase_grid = 32;
  std::size_t budget = 2000;
  std::uint64_t seed = 0;

  // sweep
  std::size_t n_max = 0;
  std::vector<std::uint64_t> seeds{0};

  // khinchin: explicit vectors plus `samples` seeded random ones of length
  // 1..max_n
  std::vector<std::vector<Complex>> vectors;
  std::size_t samples = 0;
  std::size_t max_n = 10;
};

/// Parses a config document. Missing optional fields take their defaults;
/// errors name the offending field. Throws Error(config).
InstanceConfig parse_config(const nlohmann::json& doc);
/// Reads and parses a config file; JSON syntax errors carry the byte offset.
InstanceConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const InstanceConfig& config);

struct RunResult {
  nlohmann::json report;
  std::string csv;       // sweep only
  bool violation = false;  // some certified inequality failed
};

using Progress = std::function<void(std::string_view)>;

/// Runs one mode. Guard violations propagate as Error(budget).
RunResult run(const InstanceConfig& config, const Progress& progress = {});

/// Throws Error(config) describing the first schema problem found.
void validate_report(const nlohmann::json& report);

/// Locale-independent shortest form with at most 12 significant digits.
std::string format_number(double value);

}  // namespace fex::report
