#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbfpielm/config.hpp"

namespace rbfpielm {

struct SweepAxis {
  std::string name;  ///< sigma0 | sigmac | n_units
  std::vector<double> values;
};

struct SweepSpec {
  SweepAxis axis1;
  std::optional<SweepAxis> axis2;
  RunConfig base;
  std::vector<std::uint64_t> seeds = {0, 1, 2};
  int parallelism = 1;  ///< cells solved concurrently
};

struct SweepRow {
  double axis1 = 0.0;
  std::optional<double> axis2;
  double mean_residual = 0.0;  ///< mean-abs residual averaged over seeds
  double std_residual = 0.0;   ///< sample standard deviation over seeds
  double mean_time_s = 0.0;    ///< assembly + solve
  std::string status = "ok";

  bool ok() const noexcept { return status == "ok"; }
};

/// Throws ConfigError for unknown axis names, empty or non-increasing value
/// lists, non-integral n_units values, or an empty seed list.
void validate(const SweepSpec& spec);

/// Default (sigma0, sigmac) contour grid: 10 x 10 over [0.05, 1] x [0, 2].
SweepSpec default_width_sweep(const RunConfig& base);

/// Parses `axis1 = name: v1, v2, ...`, `axis2 = ...`, `seeds = ...`,
/// `parallelism = n`. Errors carry line and column.
SweepSpec parse_sweep_spec(std::string_view text, const RunConfig& base);

/// Runs every cell (axis1 outer, axis2 inner) once per seed. A failing cell is
/// recorded with status "error: ..." and the sweep continues.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// axis1,axis2,mean_residual,std_residual,mean_time_s,status
std::string sweep_csv(const std::vector<SweepRow>& rows);
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

}  // namespace rbfpielm
