#pragma once

#include "rbfpielm/assembly.hpp"

namespace rbfpielm {

inline constexpr double kDefaultRcond = 1e-10;

struct SolveReport {
  Vector coefficients;
  double residual_norm = 0.0;      ///< ||A c - b||_2
  double residual_rms = 0.0;       ///< ||A c - b||_2 / sqrt(M)
  double residual_mean_abs = 0.0;  ///< mean |A c - b|
  int effective_rank = 0;
  double condition_number = 0.0;   ///< sigma_max / smallest retained sigma
  double wall_time_seconds = 0.0;  ///< SVD + back-substitution only
};

/// Minimum-norm least-squares solution c = A^+ b by truncated SVD. Singular
/// values <= rcond * sigma_max are dropped. Tall systems are reduced by a
/// Householder QR first and the SVD is taken of the triangular factor.
SolveReport solve_least_squares(const Matrix& a, const Vector& b, double rcond = kDefaultRcond);
SolveReport solve_least_squares(const CollocationSystem& system, double rcond = kDefaultRcond);

/// Same contract from a direct SVD of A with no QR step; slower, kept as a cross-check.
Vector pseudo_inverse_solve_reference(const Matrix& a, const Vector& b, double rcond = kDefaultRcond);

/// Fills the residual statistics of `report` from A c - b.
void fill_residual_stats(const Matrix& a, const Vector& b, SolveReport& report);

}  // namespace rbfpielm
