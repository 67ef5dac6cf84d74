#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbfpielm/pai.hpp"

namespace rbfpielm {

/// Every knob of one solve. Presets supply defaults, a key = value file
/// overrides them, and command-line flags override the file.
struct RunConfig {
  std::string preset = "cavity";
  double k1 = 10.0;  ///< mms wavenumbers
  double k2 = 10.0;
  int grid_nx = 48;  ///< cavity: interior grid; mms: full Chebyshev tensor grid
  int grid_ny = 48;
  int boundary_per_wall = 96;  ///< cavity only
  PaiConfig pai;
  bool use_pai = true;
  double rcond = 1e-10;
  bool clamped = false;
  bool scale_interior = false;
  int eval_grid = 101;
  std::filesystem::path output_dir = "out";
  bool emit_profiles = true;
  bool emit_field = true;
  bool emit_error_map = true;
  bool emit_matrix = false;
  int profile_samples = 201;
  int field_nx = 101;
  int field_ny = 101;
  int threads = 0;  ///< 0: OpenMP runtime default

  friend bool operator==(const RunConfig& a, const RunConfig& b);
};

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"cavity", "mms-k10", "mms-k20", "mms-custom"};
  return names;
}

bool is_mms_preset(std::string_view preset);

/// Defaults for a named preset; throws ConfigError for unknown names.
RunConfig preset_defaults(std::string_view preset);

/// Sets one field from its textual value. Throws ConfigError naming the key.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Parses `key = value` lines ('#' starts a comment). The preset key, or
/// `preset_override` when given, selects the defaults the remaining keys
/// modify. Errors carry line and column.
RunConfig parse_config(std::string_view text, std::optional<std::string> preset_override = std::nullopt);
RunConfig load_config(const std::filesystem::path& path, std::optional<std::string> preset_override = std::nullopt);

/// Ordered key/value view of every field; values parse back to the same config.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg);
std::string serialize_config(const RunConfig& cfg);

/// FNV-1a 64 of serialize_config, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

/// Range checks not covered by parsing (positivity, M > N* is checked later).
void validate(const RunConfig& cfg);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string to_hex(std::uint64_t v);

}  // namespace rbfpielm
