#include "rbfpielm/postprocess.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>

#include "rbfpielm/error.hpp"

namespace rbfpielm {

Solution::Solution(RbfBasis basis, Vector coefficients) : basis_(std::move(basis)), coefficients_(std::move(coefficients)) {
  if (static_cast<std::size_t>(coefficients_.size()) != basis_.size())
    throw InvalidArgument("Solution: " + std::to_string(coefficients_.size()) + " coefficients for " +
                          std::to_string(basis_.size()) + " units");
  if (!coefficients_.allFinite()) throw InvalidArgument("Solution: non-finite coefficient");
}

double Solution::evaluate(Point2 p, DerivOrder d) const {
  check_order(d);
  double acc = 0.0;
  const auto units = basis_.units();
  for (std::size_t i = 0; i < units.size(); ++i) {
    const double c = coefficients_[static_cast<Eigen::Index>(i)];
    if (c != 0.0) acc += c * eval_deriv(units[i], p, d);
  }
  return acc;
}

FieldSample sample_field(const Solution& solution, Point2 p) {
  FieldSample s;
  s.point = p;
  s.psi = solution.evaluate(p, {0, 0});
  s.u = solution.evaluate(p, {0, 1});
  s.v = -solution.evaluate(p, {1, 0});
  s.speed = std::hypot(s.u, s.v);
  return s;
}

CenterlineProfiles centerline_profiles(const Solution& solution, int n_samples) {
  if (n_samples < 2) throw InvalidArgument("centerline_profiles: n_samples must be >= 2");
  const auto t = uniform_nodes(n_samples);
  CenterlineProfiles out;
  out.u_profile.resize(t.size());
  out.v_profile.resize(t.size());
  const auto n = static_cast<std::int64_t>(t.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out.u_profile[i] = {t[i], solution.evaluate({0.5, t[i]}, {0, 1})};
    out.v_profile[i] = {t[i], -solution.evaluate({t[i], 0.5}, {1, 0})};
  }
  return out;
}

std::vector<FieldSample> field_grid(const Solution& solution, int nx, int ny) {
  if (nx < 2 || ny < 2) throw InvalidArgument("field_grid: nx and ny must be >= 2");
  const auto xs = uniform_nodes(nx);
  const auto ys = uniform_nodes(ny);
  std::vector<FieldSample> out(static_cast<std::size_t>(nx) * ny);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) out[static_cast<std::size_t>(j) * nx + i] = sample_field(solution, {xs[i], ys[j]});
  return out;
}

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.precision(17);
  return out;
}

}  // namespace

void write_profile_csv(const std::vector<ProfilePoint>& profile, const std::filesystem::path& path) {
  auto out = open_csv(path);
  out << "coord,value\n";
  for (const auto& p : profile) out << p.coord << ',' << p.value << '\n';
}

void write_field_csv(const std::vector<FieldSample>& field, const std::filesystem::path& path) {
  auto out = open_csv(path);
  out << "x,y,psi,u,v,speed\n";
  for (const auto& s : field)
    out << s.point.x << ',' << s.point.y << ',' << s.psi << ',' << s.u << ',' << s.v << ',' << s.speed << '\n';
}

}  // namespace rbfpielm
