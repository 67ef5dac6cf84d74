#include "rbfpielm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rbfpielm/error.hpp"

namespace rbfpielm {

Point2 outward_normal(BoundarySide side) noexcept {
  switch (side) {
    case BoundarySide::Bottom: return {0.0, -1.0};
    case BoundarySide::Top: return {0.0, 1.0};
    case BoundarySide::Left: return {-1.0, 0.0};
    case BoundarySide::Right: return {1.0, 0.0};
  }
  return {};
}

std::string_view to_string(BoundarySide side) noexcept {
  switch (side) {
    case BoundarySide::Bottom: return "bottom";
    case BoundarySide::Top: return "top";
    case BoundarySide::Left: return "left";
    case BoundarySide::Right: return "right";
  }
  return "?";
}

std::vector<double> chebyshev_nodes(int n) {
  if (n < 2) throw InvalidArgument("chebyshev_nodes: n must be >= 2, got " + std::to_string(n));
  std::vector<double> nodes(static_cast<std::size_t>(n));
  const int last = n - 1;
  // (1 - cos t)/2 == sin^2(t/2); the lower half is computed and mirrored so the
  // set is exactly symmetric about 1/2.
  for (int j = 0; 2 * j < last; ++j) {
    const double s = std::sin(j * std::numbers::pi / (2.0 * last));
    nodes[j] = s * s;
    nodes[last - j] = 1.0 - nodes[j];
  }
  if (last % 2 == 0) nodes[last / 2] = 0.5;
  nodes.front() = 0.0;
  nodes.back() = 1.0;
  return nodes;
}

std::vector<double> uniform_nodes(int n) {
  if (n < 2) throw InvalidArgument("uniform_nodes: n must be >= 2, got " + std::to_string(n));
  std::vector<double> nodes(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) nodes[j] = static_cast<double>(j) / (n - 1);
  nodes.back() = 1.0;
  return nodes;
}

namespace {

void check_node_list(std::span<const double> nodes, const char* name) {
  if (nodes.empty()) throw InvalidArgument(std::string("tensor_grid: ") + name + " is empty");
  if (!std::is_sorted(nodes.begin(), nodes.end()) ||
      std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
    throw InvalidArgument(std::string("tensor_grid: ") + name + " must be strictly increasing");
  if (nodes.front() != 0.0 || nodes.back() != 1.0)
    throw InvalidArgument(std::string("tensor_grid: ") + name + " must start at 0 and end at 1");
}

}  // namespace

CollocationSet tensor_grid(std::span<const double> nodes_x, std::span<const double> nodes_y) {
  check_node_list(nodes_x, "nodes_x");
  check_node_list(nodes_y, "nodes_y");

  CollocationSet set;
  const std::size_t nx = nodes_x.size();
  const std::size_t ny = nodes_y.size();
  const std::size_t rim = (nx > 1 && ny > 1) ? 2 * (nx + ny) - 4 : nx * ny;
  set.interior.reserve(nx * ny - rim);
  set.boundary.reserve(rim);

  for (double y : nodes_y) {
    for (double x : nodes_x) {
      const Point2 p{x, y};
      if (y == 0.0) {
        set.boundary.push_back({p, BoundarySide::Bottom});
      } else if (y == 1.0) {
        set.boundary.push_back({p, BoundarySide::Top});
      } else if (x == 0.0) {
        set.boundary.push_back({p, BoundarySide::Left});
      } else if (x == 1.0) {
        set.boundary.push_back({p, BoundarySide::Right});
      } else {
        set.interior.push_back(p);
      }
    }
  }
  return set;
}

CollocationSet clustered_cavity_points(int nx, int ny, int per_wall) {
  if (nx < 1 || ny < 1 || per_wall < 1)
    throw InvalidArgument("clustered_cavity_points: counts must be positive");
  const auto gx = chebyshev_nodes(nx + 2);
  const auto gy = chebyshev_nodes(ny + 2);
  const auto gw = chebyshev_nodes(per_wall + 2);

  CollocationSet set;
  set.interior.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 1; j <= ny; ++j)
    for (int i = 1; i <= nx; ++i) set.interior.push_back({gx[i], gy[j]});

  set.boundary.reserve(4 * static_cast<std::size_t>(per_wall));
  for (BoundarySide side : kAllSides) {
    for (int k = 1; k <= per_wall; ++k) {
      const double t = gw[k];
      Point2 p;
      switch (side) {
        case BoundarySide::Bottom: p = {t, 0.0}; break;
        case BoundarySide::Top: p = {t, 1.0}; break;
        case BoundarySide::Left: p = {0.0, t}; break;
        case BoundarySide::Right: p = {1.0, t}; break;
      }
      set.boundary.push_back({p, side});
    }
  }
  return set;
}

WallDistances wall_distances(Point2 p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.x < 0.0 || p.x > 1.0 || p.y < 0.0 || p.y > 1.0)
    throw InvalidArgument("wall_distances: point outside the unit square");
  const double l_min = std::min({p.x, 1.0 - p.x, p.y, 1.0 - p.y});
  return {l_min, kMaxWallDistance};
}

void validate(const CollocationSet& points) {
  for (const auto& p : points.interior) {
    if (!(p.x > 0.0 && p.x < 1.0 && p.y > 0.0 && p.y < 1.0))
      throw InvalidArgument("collocation set: interior point not strictly inside the unit square");
  }
  for (const auto& b : points.boundary) {
    const auto [x, y] = b.point;
    if (!std::isfinite(x) || !std::isfinite(y) || x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
      throw InvalidArgument("collocation set: boundary point outside the unit square");
    bool on_side = false;
    switch (b.side) {
      case BoundarySide::Bottom: on_side = y == 0.0; break;
      case BoundarySide::Top: on_side = y == 1.0; break;
      case BoundarySide::Left: on_side = x == 0.0; break;
      case BoundarySide::Right: on_side = x == 1.0; break;
    }
    if (!on_side) throw InvalidArgument("collocation set: boundary point not on its tagged side");
  }

  auto less = [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  std::vector<Point2> sorted = points.interior;
  std::sort(sorted.begin(), sorted.end(), less);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("collocation set: duplicate interior point");
  sorted.clear();
  for (const auto& b : points.boundary) sorted.push_back(b.point);
  std::sort(sorted.begin(), sorted.end(), less);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("collocation set: duplicate boundary point");
}

}  // namespace rbfpielm
