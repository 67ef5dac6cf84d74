#pragma once

#include "rbfpielm/geometry.hpp"
#include "rbfpielm/operators.hpp"
#include "rbfpielm/postprocess.hpp"

namespace rbfpielm {

/// Manufactured solution u = sin(k1 x) cos(k2 y), for which
/// biharmonic(u) = (k1^4 + 2 k1^2 k2^2 + k2^4) u.
struct MmsSpec {
  double k1 = 10.0;
  double k2 = 10.0;

  double exact(Point2 p) const;
  double exact_dx(Point2 p) const;
  double exact_dy(Point2 p) const;
  double source_amplitude() const;
  /// biharmonic(u) at p.
  double biharmonic_of_exact(Point2 p) const;
};

/// Stokes lid-driven cavity in streamfunction form: biharmonic(psi) = 0,
/// psi = 0 on every wall, psi_y = 1 on the lid, zero normal derivative on
/// the other three walls.
PdeProblem cavity_problem();

/// Biharmonic problem whose exact solution is spec.exact. The stored source
/// is -biharmonic(u) so that L(u) + f = 0. Dirichlet data on all walls, plus
/// the exact normal derivative when `clamped`.
PdeProblem mms_problem(const MmsSpec& spec, bool clamped = false);

struct ErrorStats {
  double mean_abs = 0.0;
  double max_abs = 0.0;
  double rms = 0.0;
};

inline constexpr int kDefaultEvalGrid = 101;

/// Uniform n x n grid for error measurement, independent of the collocation grid.
CollocationSet evaluation_grid(int n = kDefaultEvalGrid);

/// |u_hat - u_exact| statistics over every point of `grid`.
ErrorStats error_stats(const Solution& solution, const ScalarField& exact, const CollocationSet& grid);

}  // namespace rbfpielm
