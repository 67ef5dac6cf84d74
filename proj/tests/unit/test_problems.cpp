#include <doctest.h>

#include <cmath>

#include "rbfpielm/assembly.hpp"
#include "rbfpielm/error.hpp"
#include "rbfpielm/lsq_solver.hpp"
#include "rbfpielm/pai.hpp"
#include "rbfpielm/problems.hpp"

using namespace rbfpielm;

namespace {

double mms_error(int n_units, std::uint64_t seed) {
  MmsSpec spec{2.0, 2.0};
  auto nodes = chebyshev_nodes(40);
  auto grid = tensor_grid(nodes, nodes);
  auto basis = place_centers_pai({.n_units = static_cast<std::size_t>(n_units), .seed = seed});
  auto sys = assemble(mms_problem(spec), grid, basis, {.scale_interior = true});
  auto rep = solve_least_squares(sys, 1e-12);
  Solution sol(basis, rep.coefficients);
  return error_stats(sol, [&](Point2 p) { return spec.exact(p); }, evaluation_grid()).mean_abs;
}

}  // namespace

TEST_CASE("cavity problem data") {
  auto p = cavity_problem();
  for (Point2 q : {Point2{0.5, 0.5}, Point2{0.01, 0.99}}) CHECK(p.source(q) == 0.0);
  const auto& top = p.conditions(BoundarySide::Top);
  REQUIRE(top.size() == 2);
  CHECK(top[0].target({0.3, 1.0}) == 0.0);
  CHECK(top[1].target({0.3, 1.0}) == 1.0);
  CHECK(top[1].op.terms()[0].order == DerivOrder{0, 1});
  const auto& bottom = p.conditions(BoundarySide::Bottom);
  REQUIRE(bottom.size() == 2);
  CHECK(bottom[0].target({0.3, 0.0}) == 0.0);
  CHECK(bottom[1].target({0.3, 0.0}) == 0.0);
  for (auto side : {BoundarySide::Left, BoundarySide::Right}) {
    const auto& c = p.conditions(side);
    REQUIRE(c.size() == 2);
    CHECK(c[1].op.terms()[0].order == DerivOrder{1, 0});
  }
}

TEST_CASE("manufactured solution data") {
  MmsSpec k10{10.0, 10.0};
  CHECK(k10.source_amplitude() == 4e4);
  CHECK(k10.exact({1.0, 0.0}) == doctest::Approx(-0.544021).epsilon(1e-6));

  auto p = mms_problem(k10);
  CHECK(p.source({0.2, 0.3}) == doctest::Approx(-4e4 * std::sin(2.0) * std::cos(3.0)));
  CHECK(p.conditions(BoundarySide::Bottom).size() == 1);
  CHECK(p.conditions(BoundarySide::Bottom)[0].target({1.0, 0.0}) == doctest::Approx(std::sin(10.0)));

  auto clamped = mms_problem(k10, true);
  REQUIRE(clamped.conditions(BoundarySide::Left).size() == 2);
  // outward derivative on Left is -u_x
  CHECK(clamped.conditions(BoundarySide::Left)[1].target({0.0, 0.3}) ==
        doctest::Approx(-10.0 * std::cos(3.0)));
  CHECK(clamped.conditions(BoundarySide::Top)[1].target({0.2, 1.0}) ==
        doctest::Approx(-10.0 * std::sin(2.0) * std::sin(10.0)));

  MmsSpec zero{0.0, 0.0};
  auto pz = mms_problem(zero, true);
  for (auto side : kAllSides)
    for (const auto& c : pz.conditions(side)) CHECK(c.target({0.5, 0.0}) == 0.0);
  CHECK(pz.source({0.4, 0.4}) == 0.0);
}

TEST_CASE("manufactured identity holds at collocation points") {
  // biharmonic of sin(k1 x) cos(k2 y) expanded term by term
  for (auto [k1, k2] : {std::pair{10.0, 10.0}, std::pair{20.0, 20.0}, std::pair{3.0, 7.0}}) {
    MmsSpec spec{k1, k2};
    auto p = mms_problem(spec);
    auto nodes = chebyshev_nodes(15);
    auto grid = tensor_grid(nodes, nodes);
    for (Point2 q : grid.interior) {
      const double s = std::sin(k1 * q.x), c = std::cos(k2 * q.y);
      const double l = std::pow(k1, 4) * s * c + 2.0 * k1 * k1 * k2 * k2 * s * c + std::pow(k2, 4) * s * c;
      CHECK(std::abs(l + p.source(q)) <= 1e-8 * spec.source_amplitude());
    }
  }
}

TEST_CASE("evaluation grid") {
  auto g = evaluation_grid();
  CHECK(g.size() == 101 * 101);
  auto small = evaluation_grid(3);
  CHECK(small.interior.size() == 1);
}

TEST_CASE("error statistics") {
  MmsSpec spec{10.0, 10.0};
  auto grid = evaluation_grid();
  Solution zero(RbfBasis({{{0.5, 0.5}, 0.3}}), Vector::Zero(1));
  auto e = error_stats(zero, [&](Point2 p) { return spec.exact(p); }, grid);

  double sx = 0.0, sy = 0.0;
  for (int i = 0; i <= 100; ++i) {
    sx += std::abs(std::sin(0.1 * i));
    sy += std::abs(std::cos(0.1 * i));
  }
  CHECK(e.mean_abs == doctest::Approx((sx / 101) * (sy / 101)).epsilon(1e-12));
  CHECK(e.mean_abs == doctest::Approx(0.40).epsilon(0.03));
  CHECK(e.max_abs >= e.rms);
  CHECK(e.rms >= 0.0);
  CHECK(e.mean_abs <= e.max_abs);

  CHECK_THROWS_AS(error_stats(zero, [](Point2) { return 0.0; }, CollocationSet{}), InvalidArgument);
}

TEST_CASE("fitting exact values reproduces the function") {
  MmsSpec spec{1.0, 1.0};
  auto basis = place_centers_pai({.n_units = 120, .sigma0 = 0.15, .sigmac = 0.2});
  auto nodes = chebyshev_nodes(30);
  auto pts = tensor_grid(nodes, nodes);
  std::map<BoundarySide, std::vector<BoundaryCondition>> bcs;
  for (auto s : kAllSides) bcs[s].push_back(dirichlet([&](Point2 p) { return spec.exact(p); }));
  PdeProblem fit(LinearPdeOperator({DerivTerm{1.0, {0, 0}}}), [&](Point2 p) { return -spec.exact(p); }, bcs);
  auto rep = solve_least_squares(assemble(fit, pts, basis), 1e-13);
  Solution sol(basis, rep.coefficients);
  auto e = error_stats(sol, [&](Point2 p) { return spec.exact(p); }, evaluation_grid());
  CHECK(e.mean_abs <= 1e-4);
  CHECK(e.max_abs <= 1e-3);
}

TEST_CASE("smooth case error shrinks with more units") {
  const double e100 = mms_error(100, 0);
  const double e200 = mms_error(200, 0);
  const double e400 = mms_error(400, 0);
  MESSAGE("k=2 errors: ", e100, " ", e200, " ", e400);
  const int inversions = (e200 > e100) + (e400 > e200);
  CHECK(inversions <= 1);
  CHECK(e400 < e100);
}
