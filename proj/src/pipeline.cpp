#include "rbfpielm/pipeline.hpp"

#include <chrono>

#include "rbfpielm/error.hpp"

namespace rbfpielm {

PdeProblem make_problem(const RunConfig& cfg) {
  if (auto mms = exact_solution(cfg)) return mms_problem(*mms, cfg.clamped);
  return cavity_problem();
}

CollocationSet make_points(const RunConfig& cfg) {
  if (cfg.preset == "cavity") return clustered_cavity_points(cfg.grid_nx, cfg.grid_ny, cfg.boundary_per_wall);
  const auto nx = chebyshev_nodes(cfg.grid_nx);
  const auto ny = chebyshev_nodes(cfg.grid_ny);
  return tensor_grid(nx, ny);
}

RbfBasis make_basis(const RunConfig& cfg) {
  return cfg.use_pai ? place_centers_pai(cfg.pai) : place_centers_uniform(cfg.pai);
}

std::optional<MmsSpec> exact_solution(const RunConfig& cfg) {
  if (!is_mms_preset(cfg.preset)) return std::nullopt;
  return MmsSpec{cfg.k1, cfg.k2};
}

namespace {
using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }
}  // namespace

RunResult run_pipeline(const RunConfig& cfg, const RunOptions& options) {
  validate(cfg);
  const auto t_total = Clock::now();

  const PdeProblem problem = make_problem(cfg);
  const CollocationSet points = make_points(cfg);
  RbfBasis basis = make_basis(cfg);

  RunTimings timings;
  const auto t_train = Clock::now();
  CollocationSystem system = assemble(problem, points, basis, {cfg.scale_interior});
  timings.assembly_s = seconds_since(t_train);
  SolveReport solve = solve_least_squares(system, cfg.rcond);
  timings.train_s = seconds_since(t_train);
  timings.solve_s = timings.train_s - timings.assembly_s;

  Solution solution(std::move(basis), solve.coefficients);
  std::optional<ErrorStats> error, collocation_error;
  if (options.compute_error) {
    if (auto mms = exact_solution(cfg)) {
      const ScalarField exact = [spec = *mms](Point2 p) { return spec.exact(p); };
      error = error_stats(solution, exact, evaluation_grid(cfg.eval_grid));
      collocation_error = error_stats(solution, exact, points);
    }
  }
  timings.total_s = seconds_since(t_total);

  RunResult result{cfg,
                   points.interior.size(),
                   points.boundary.size(),
                   system.rows(),
                   std::move(solve),
                   std::move(solution),
                   error,
                   collocation_error,
                   std::nullopt,
                   timings};
  if (options.keep_system) result.system = std::move(system);
  return result;
}

}  // namespace rbfpielm
