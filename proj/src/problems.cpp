#include "rbfpielm/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "rbfpielm/error.hpp"

namespace rbfpielm {

double MmsSpec::exact(Point2 p) const { return std::sin(k1 * p.x) * std::cos(k2 * p.y); }
double MmsSpec::exact_dx(Point2 p) const { return k1 * std::cos(k1 * p.x) * std::cos(k2 * p.y); }
double MmsSpec::exact_dy(Point2 p) const { return -k2 * std::sin(k1 * p.x) * std::sin(k2 * p.y); }

double MmsSpec::source_amplitude() const {
  const double a = k1 * k1;
  const double b = k2 * k2;
  return a * a + 2.0 * a * b + b * b;
}

double MmsSpec::biharmonic_of_exact(Point2 p) const { return source_amplitude() * exact(p); }

PdeProblem cavity_problem() {
  std::map<BoundarySide, std::vector<BoundaryCondition>> bcs;
  bcs[BoundarySide::Bottom] = {dirichlet(0.0), normal_derivative(BoundarySide::Bottom, 0.0)};
  bcs[BoundarySide::Top] = {dirichlet(0.0), tangential_y_derivative(1.0)};
  bcs[BoundarySide::Left] = {dirichlet(0.0), normal_derivative(BoundarySide::Left, 0.0)};
  bcs[BoundarySide::Right] = {dirichlet(0.0), normal_derivative(BoundarySide::Right, 0.0)};
  return PdeProblem(biharmonic(), [](Point2) { return 0.0; }, std::move(bcs));
}

PdeProblem mms_problem(const MmsSpec& spec, bool clamped) {
  std::map<BoundarySide, std::vector<BoundaryCondition>> bcs;
  for (BoundarySide side : kAllSides) {
    auto& list = bcs[side];
    list.push_back(dirichlet([spec](Point2 p) { return spec.exact(p); }));
    if (clamped) {
      const Point2 n = outward_normal(side);
      list.push_back(normal_derivative(side, [spec, n](Point2 p) {
        return n.x * spec.exact_dx(p) + n.y * spec.exact_dy(p);
      }));
    }
  }
  return PdeProblem(biharmonic(), [spec](Point2 p) { return -spec.biharmonic_of_exact(p); }, std::move(bcs));
}

CollocationSet evaluation_grid(int n) {
  const auto nodes = uniform_nodes(n);
  return tensor_grid(nodes, nodes);
}

ErrorStats error_stats(const Solution& solution, const ScalarField& exact, const CollocationSet& grid) {
  std::vector<Point2> pts = grid.interior;
  for (const auto& b : grid.boundary) pts.push_back(b.point);
  if (pts.empty()) throw InvalidArgument("error_stats: empty evaluation grid");

  std::vector<double> err(pts.size());
  std::vector<double> ref(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) ref[i] = exact(pts[i]);
  const auto n = static_cast<std::int64_t>(pts.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) err[i] = std::abs(solution.evaluate(pts[i]) - ref[i]);

  ErrorStats stats;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double e : err) {
    sum += e;
    sum_sq += e * e;
    stats.max_abs = std::max(stats.max_abs, e);
  }
  stats.mean_abs = sum / static_cast<double>(err.size());
  stats.rms = std::sqrt(sum_sq / static_cast<double>(err.size()));
  return stats;
}

}  // namespace rbfpielm
