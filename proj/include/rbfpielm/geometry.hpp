#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace rbfpielm {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

enum class BoundarySide { Bottom, Top, Left, Right };

inline constexpr std::array<BoundarySide, 4> kAllSides = {BoundarySide::Bottom, BoundarySide::Top,
                                                          BoundarySide::Left, BoundarySide::Right};

/// Outward unit normal of a wall of the unit square.
Point2 outward_normal(BoundarySide side) noexcept;
std::string_view to_string(BoundarySide side) noexcept;

struct BoundaryPoint {
  Point2 point;
  BoundarySide side;
};

/// Interior and boundary collocation points on [0,1]^2.
struct CollocationSet {
  std::vector<Point2> interior;
  std::vector<BoundaryPoint> boundary;

  std::size_t size() const noexcept { return interior.size() + boundary.size(); }
};

/// Chebyshev-Gauss-Lobatto nodes mapped to [0,1]: x_j = (1 - cos(j pi / (n-1))) / 2.
std::vector<double> chebyshev_nodes(int n);

/// n equispaced nodes on [0,1] including both endpoints.
std::vector<double> uniform_nodes(int n);

/// Cartesian product of two node lists. Points on the rim become boundary
/// points; corners go to Bottom/Top.
CollocationSet tensor_grid(std::span<const double> nodes_x, std::span<const double> nodes_y);

/// Chebyshev interior grid of nx*ny points (the interior nodes of an
/// (nx+2)x(ny+2) Chebyshev tensor grid) plus per_wall Chebyshev points on
/// each wall, corners excluded.
CollocationSet clustered_cavity_points(int nx, int ny, int per_wall);

struct WallDistances {
  double l_min = 0.0;
  double l_max = 0.0;
};

/// Largest nearest-wall distance attainable in the unit square.
inline constexpr double kMaxWallDistance = 0.5;

WallDistances wall_distances(Point2 p);

/// Throws InvalidArgument if any CollocationSet invariant is violated.
void validate(const CollocationSet& points);

}  // namespace rbfpielm
