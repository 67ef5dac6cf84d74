#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "rbfpielm/error.hpp"
#include "rbfpielm/geometry.hpp"

using namespace rbfpielm;

TEST_CASE("chebyshev_nodes small cases") {
  CHECK(chebyshev_nodes(2) == std::vector<double>{0.0, 1.0});
  CHECK(chebyshev_nodes(3) == std::vector<double>{0.0, 0.5, 1.0});

  auto x = chebyshev_nodes(5);
  REQUIRE(x.size() == 5);
  const double expected[] = {0.0, 0.146447, 0.5, 0.853553, 1.0};
  for (int j = 0; j < 5; ++j) CHECK(x[j] == doctest::Approx(expected[j]).epsilon(1e-6));
  CHECK(x[1] + x[3] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("chebyshev_nodes rejects n < 2") {
  CHECK_THROWS_AS(chebyshev_nodes(1), InvalidArgument);
  CHECK_THROWS_AS(chebyshev_nodes(0), InvalidArgument);
  CHECK_THROWS_AS(chebyshev_nodes(-3), InvalidArgument);
}

TEST_CASE("chebyshev_nodes properties") {
  for (int n = 2; n <= 120; ++n) {
    auto x = chebyshev_nodes(n);
    REQUIRE(x.size() == static_cast<std::size_t>(n));
    CHECK(x.front() == 0.0);
    CHECK(x.back() == 1.0);
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(x[j] + x[n - 1 - j] - 1.0) <= 1e-14);
      CHECK(std::abs(x[j] - 0.5 * (1.0 - std::cos(j * std::numbers::pi / (n - 1)))) <= 1e-14);
      if (j > 0) CHECK(x[j] > x[j - 1]);
    }
    if (n >= 5) {
      int m = (n + 1) / 2;
      CHECK(x[1] - x[0] < x[m] - x[m - 1]);
    }
  }
}

TEST_CASE("uniform_nodes") {
  auto x = uniform_nodes(5);
  CHECK(x == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK_THROWS_AS(uniform_nodes(1), InvalidArgument);
}

TEST_CASE("tensor_grid 3x3") {
  std::vector<double> n = {0.0, 0.5, 1.0};
  auto g = tensor_grid(n, n);
  REQUIRE(g.interior.size() == 1);
  CHECK(g.interior[0] == Point2{0.5, 0.5});
  CHECK(g.boundary.size() == 8);
  for (const auto& b : g.boundary) {
    if (b.point.y == 0.0) CHECK(b.side == BoundarySide::Bottom);
    else if (b.point.y == 1.0) CHECK(b.side == BoundarySide::Top);
    else if (b.point.x == 0.0) CHECK(b.side == BoundarySide::Left);
    else CHECK(b.side == BoundarySide::Right);
  }
  CHECK_NOTHROW(validate(g));
}

TEST_CASE("tensor_grid corners only") {
  std::vector<double> n = {0.0, 1.0};
  auto g = tensor_grid(n, n);
  CHECK(g.interior.empty());
  REQUIRE(g.boundary.size() == 4);
  int bottom = 0, top = 0;
  for (const auto& b : g.boundary) {
    bottom += b.side == BoundarySide::Bottom;
    top += b.side == BoundarySide::Top;
  }
  CHECK(bottom == 2);
  CHECK(top == 2);
}

TEST_CASE("tensor_grid chebyshev 60") {
  auto n = chebyshev_nodes(60);
  auto g = tensor_grid(n, n);
  CHECK(g.interior.size() == 3364);
  CHECK(g.boundary.size() == 236);
  CHECK(g.size() == 3600);
  CHECK_NOTHROW(validate(g));
}

TEST_CASE("tensor_grid partitions rectangular products") {
  for (int nx = 2; nx < 9; ++nx)
    for (int ny = 2; ny < 9; ++ny) {
      auto g = tensor_grid(chebyshev_nodes(nx), uniform_nodes(ny));
      CHECK(g.size() == static_cast<std::size_t>(nx * ny));
      CHECK(g.interior.size() == static_cast<std::size_t>((nx - 2) * (ny - 2)));
    }
}

TEST_CASE("tensor_grid rejects bad node lists") {
  std::vector<double> ok = {0.0, 1.0};
  std::vector<double> empty;
  std::vector<double> unsorted = {0.0, 0.7, 0.3, 1.0};
  std::vector<double> no_end = {0.0, 0.5};
  std::vector<double> outside = {-0.1, 0.5, 1.0};
  CHECK_THROWS_AS(tensor_grid(empty, ok), InvalidArgument);
  CHECK_THROWS_AS(tensor_grid(ok, empty), InvalidArgument);
  CHECK_THROWS_AS(tensor_grid(unsorted, ok), InvalidArgument);
  CHECK_THROWS_AS(tensor_grid(ok, no_end), InvalidArgument);
  CHECK_THROWS_AS(tensor_grid(outside, ok), InvalidArgument);
}

TEST_CASE("clustered_cavity_points default split") {
  auto g = clustered_cavity_points(48, 48, 96);
  CHECK(g.interior.size() == 2304);
  CHECK(g.boundary.size() == 384);
  CHECK(g.size() == 2688);
  CHECK_NOTHROW(validate(g));
  for (auto side : kAllSides) {
    auto n = std::count_if(g.boundary.begin(), g.boundary.end(), [&](const BoundaryPoint& b) { return b.side == side; });
    CHECK(n == 96);
  }
}

TEST_CASE("outward normals") {
  CHECK(outward_normal(BoundarySide::Bottom) == Point2{0.0, -1.0});
  CHECK(outward_normal(BoundarySide::Top) == Point2{0.0, 1.0});
  CHECK(outward_normal(BoundarySide::Left) == Point2{-1.0, 0.0});
  CHECK(outward_normal(BoundarySide::Right) == Point2{1.0, 0.0});
}

TEST_CASE("wall_distances") {
  auto a = wall_distances({0.5, 0.5});
  CHECK(a.l_min == 0.5);
  CHECK(a.l_max == 0.5);
  auto b = wall_distances({0.0, 0.3});
  CHECK(b.l_min == 0.0);
  CHECK(b.l_max == 0.5);
  auto c = wall_distances({0.1, 0.4});
  CHECK(c.l_min == doctest::Approx(0.1));
  CHECK(c.l_max == 0.5);
  CHECK_THROWS_AS(wall_distances({-0.01, 0.5}), InvalidArgument);
  CHECK_THROWS_AS(wall_distances({0.5, 1.01}), InvalidArgument);
}

TEST_CASE("validate catches broken sets") {
  CollocationSet s;
  s.interior = {{0.5, 0.5}, {0.5, 0.5}};
  CHECK_THROWS_AS(validate(s), InvalidArgument);
  s.interior = {{0.0, 0.5}};
  CHECK_THROWS_AS(validate(s), InvalidArgument);
  s.interior = {{0.5, 0.5}};
  s.boundary = {{{0.3, 0.0}, BoundarySide::Top}};
  CHECK_THROWS_AS(validate(s), InvalidArgument);
  s.boundary = {{{0.3, 1.0}, BoundarySide::Top}};
  CHECK_NOTHROW(validate(s));
}
