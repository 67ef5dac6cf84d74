#pragma once

#include <cstddef>
#include <cstdint>

#include "rbfpielm/geometry.hpp"
#include "rbfpielm/rbf_basis.hpp"

namespace rbfpielm {

/// Physics-aware initialization parameters.
///
/// Widths follow sigma = sigma0 + sigmac * (l_min / l_max), where l_min is the
/// center's distance to the nearest wall and l_max = 0.5 on the unit square,
/// so kernels are narrow near walls and broad at the center.
struct PaiConfig {
  std::size_t n_units = 750;
  double sigma0 = 0.3;
  double sigmac = 0.93;
  /// 1 draws centers from the Chebyshev (arcsine) law per axis; larger values
  /// push mass further toward the walls.
  double boundary_oversample = 1.0;
  std::uint64_t seed = 0;
};

void validate(const PaiConfig& cfg);

double width_heuristic(Point2 p, const PaiConfig& cfg);

/// Maps u in (0,1) to a wall-clustered coordinate in [0,1]. With
/// oversample == 1 this is (1 - cos(pi u)) / 2.
double clustered_coordinate(double u, double oversample);

/// Wall-clustered centers with heuristic widths.
RbfBasis place_centers_pai(const PaiConfig& cfg);

/// Uniform centers in the open square with one shared width, the heuristic
/// at l_min / l_max = 1/2.
RbfBasis place_centers_uniform(const PaiConfig& cfg);

}  // namespace rbfpielm
