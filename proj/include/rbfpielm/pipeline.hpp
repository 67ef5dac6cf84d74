#pragma once

#include <optional>

#include "rbfpielm/assembly.hpp"
#include "rbfpielm/config.hpp"
#include "rbfpielm/lsq_solver.hpp"
#include "rbfpielm/postprocess.hpp"
#include "rbfpielm/problems.hpp"

namespace rbfpielm {

PdeProblem make_problem(const RunConfig& cfg);
CollocationSet make_points(const RunConfig& cfg);
RbfBasis make_basis(const RunConfig& cfg);
/// Exact solution for manufactured presets, empty for the cavity.
std::optional<MmsSpec> exact_solution(const RunConfig& cfg);

struct RunTimings {
  double assembly_s = 0.0;
  double solve_s = 0.0;
  double train_s = 0.0;  ///< assembly + solve
  double total_s = 0.0;
};

struct RunResult {
  RunConfig config;
  std::size_t interior_points = 0;
  std::size_t boundary_points = 0;
  std::size_t rows = 0;
  SolveReport solve;
  Solution solution;
  std::optional<ErrorStats> error;             ///< uniform evaluation grid
  std::optional<ErrorStats> collocation_error;  ///< at the collocation points
  std::optional<CollocationSystem> system;
  RunTimings timings;
};

struct RunOptions {
  bool compute_error = true;
  bool keep_system = false;
};

/// points -> basis -> assemble -> solve -> (error statistics).
RunResult run_pipeline(const RunConfig& cfg, const RunOptions& options = {});

}  // namespace rbfpielm
