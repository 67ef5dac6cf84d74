#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rbfpielm/config.hpp"
#include "rbfpielm/pipeline.hpp"

namespace rbfpielm {

inline constexpr std::string_view kLibraryVersion = "0.1.0";

/// Everything a run reports, serialized as one JSON document.
struct RunReport {
  std::string library_version{kLibraryVersion};
  RunConfig config;
  std::string config_hash;
  std::size_t n_units = 0;
  std::size_t interior_points = 0;
  std::size_t boundary_points = 0;
  std::size_t rows = 0;
  double residual_norm = 0.0;
  double residual_rms = 0.0;
  double residual_mean_abs = 0.0;
  int effective_rank = 0;
  double condition_number = 0.0;
  std::optional<ErrorStats> error;
  std::optional<ErrorStats> collocation_error;
  std::string coefficients_hash;
  RunTimings timings;
};

RunReport make_report(const RunResult& result);

/// FNV-1a over the raw bytes of the coefficient vector.
std::string coefficients_hash(const Vector& c);

std::string to_json_text(const RunReport& report);
/// Inverse of to_json_text; throws ConfigError on malformed input.
RunReport parse_report(std::string_view text);

}  // namespace rbfpielm
