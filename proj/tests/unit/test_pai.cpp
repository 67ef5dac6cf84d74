#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rbfpielm/error.hpp"
#include "rbfpielm/pai.hpp"

using namespace rbfpielm;

namespace {

double near_wall_fraction(const RbfBasis& b, double band) {
  int n = 0;
  for (const auto& u : b.units()) n += wall_distances(u.center).l_min < band;
  return static_cast<double>(n) / b.size();
}

}  // namespace

TEST_CASE("width heuristic examples") {
  PaiConfig cfg;
  for (Point2 p : {Point2{0.0, 0.4}, Point2{1.0, 0.2}, Point2{0.6, 0.0}, Point2{0.3, 1.0}})
    CHECK(width_heuristic(p, cfg) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(width_heuristic({0.5, 0.5}, cfg) == doctest::Approx(1.23).epsilon(1e-15));
  CHECK(width_heuristic({0.25, 0.5}, cfg) == doctest::Approx(0.765).epsilon(1e-15));
}

TEST_CASE("width heuristic range and monotonicity") {
  PaiConfig cfg{.sigma0 = 0.2, .sigmac = 1.7};
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> pos(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    Point2 p{pos(rng), pos(rng)};
    const double s = width_heuristic(p, cfg);
    CHECK(s >= cfg.sigma0);
    CHECK(s <= cfg.sigma0 + cfg.sigmac);
  }
  double prev = 0.0;
  for (int k = 0; k <= 50; ++k) {
    const double s = width_heuristic({0.01 * k, 0.5}, cfg);
    CHECK(s >= prev);
    prev = s;
  }
}

TEST_CASE("clustered coordinate") {
  for (double u : {1e-9, 0.1, 0.25, 0.5, 0.8, 1.0 - 1e-9})
    CHECK(clustered_coordinate(u, 1.0) == doctest::Approx(0.5 * (1.0 - std::cos(std::numbers::pi * u))));
  CHECK(clustered_coordinate(0.5, 3.0) == doctest::Approx(0.5));
  // stronger oversampling pulls a fixed quantile toward the wall
  CHECK(clustered_coordinate(0.2, 2.0) < clustered_coordinate(0.2, 1.0));
  CHECK(clustered_coordinate(0.8, 2.0) > clustered_coordinate(0.8, 1.0));
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(validate(PaiConfig{.n_units = 0}), InvalidArgument);
  CHECK_THROWS_AS(validate(PaiConfig{.sigma0 = 0.0}), InvalidArgument);
  CHECK_THROWS_AS(validate(PaiConfig{.sigmac = -0.1}), InvalidArgument);
  CHECK_THROWS_AS(validate(PaiConfig{.boundary_oversample = 0.5}), InvalidArgument);
  CHECK_THROWS_AS(place_centers_pai(PaiConfig{.n_units = 0}), InvalidArgument);
  CHECK_THROWS_AS(place_centers_uniform(PaiConfig{.sigma0 = -1.0}), InvalidArgument);
}

TEST_CASE("single unit") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto b = place_centers_pai({.n_units = 1, .seed = seed});
    REQUIRE(b.size() == 1);
    CHECK(b[0].width >= 0.3);
    CHECK(b[0].width <= 1.23);
    auto u = place_centers_uniform({.n_units = 1, .seed = seed});
    REQUIRE(u.size() == 1);
    CHECK(u[0].center.x > 0.0);
    CHECK(u[0].center.x < 1.0);
    CHECK(u[0].center.y > 0.0);
    CHECK(u[0].center.y < 1.0);
  }
}

TEST_CASE("pai placement properties") {
  PaiConfig cfg;
  auto b = place_centers_pai(cfg);
  REQUIRE(b.size() == 750);
  for (const auto& u : b.units()) {
    CHECK(u.center.x >= 0.0);
    CHECK(u.center.x <= 1.0);
    CHECK(u.center.y >= 0.0);
    CHECK(u.center.y <= 1.0);
    CHECK(u.width == width_heuristic(u.center, cfg));
  }
  CHECK(b == place_centers_pai(cfg));
  CHECK_FALSE(b == place_centers_pai({.seed = 1}));
}

TEST_CASE("pai oversamples the wall band") {
  // uniform reference mass of {l_min < 0.1} estimated from 1e6 draws
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> pos(0.0, 1.0);
  int hits = 0;
  const int draws = 1000000;
  for (int k = 0; k < draws; ++k) hits += wall_distances({pos(rng), pos(rng)}).l_min < 0.1;
  const double uniform_mass = static_cast<double>(hits) / draws;
  CHECK(uniform_mass == doctest::Approx(0.36).epsilon(0.01));

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto b = place_centers_pai({.seed = seed});
    CHECK(near_wall_fraction(b, 0.1) > uniform_mass);
  }
  auto stronger = place_centers_pai({.n_units = 5000, .boundary_oversample = 2.0});
  auto plain = place_centers_pai({.n_units = 5000});
  CHECK(near_wall_fraction(stronger, 0.1) > near_wall_fraction(plain, 0.1));
}

TEST_CASE("uniform placement") {
  auto b = place_centers_uniform({});
  REQUIRE(b.size() == 750);
  for (const auto& u : b.units()) CHECK(u.width == doctest::Approx(0.765).epsilon(1e-15));
  CHECK(b == place_centers_uniform({}));
  CHECK(near_wall_fraction(b, 0.1) == doctest::Approx(0.36).epsilon(0.2));
}
