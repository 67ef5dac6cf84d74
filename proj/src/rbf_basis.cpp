#include "rbfpielm/rbf_basis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "rbfpielm/error.hpp"

namespace rbfpielm {

RbfBasis::RbfBasis(std::vector<RbfUnit> units) : units_(std::move(units)) {
  for (const auto& u : units_) {
    if (!(u.width > 0.0) || !std::isfinite(u.width))
      throw InvalidArgument("RbfBasis: unit width must be positive and finite");
    if (!std::isfinite(u.center.x) || !std::isfinite(u.center.y))
      throw InvalidArgument("RbfBasis: unit center must be finite");
  }
}

double RbfBasis::min_width() const noexcept {
  double w = std::numeric_limits<double>::infinity();
  for (const auto& u : units_) w = std::min(w, u.width);
  return w;
}

bool operator==(const RbfBasis& a, const RbfBasis& b) noexcept {
  return std::equal(a.units_.begin(), a.units_.end(), b.units_.begin(), b.units_.end(),
                    [](const RbfUnit& l, const RbfUnit& r) { return l.center == r.center && l.width == r.width; });
}

void check_order(DerivOrder d) {
  if (d.ox < 0 || d.oy < 0 || d.total() > kMaxDerivOrder)
    throw UnsupportedOrder("derivative order (" + std::to_string(d.ox) + "," + std::to_string(d.oy) +
                           ") exceeds total order " + std::to_string(kMaxDerivOrder));
}

namespace {

// Derivatives 0..4 of g(t) = exp(-t^2/(2 s^2)):
//   g^(n)(t) = (-1)^n (s sqrt2)^-n H_n(t/(s sqrt2)) g(t),
// expanded with u = t/s so no sqrt2 round-off enters.
inline std::array<double, kMaxDerivOrder + 1> gaussian_derivs(double t, double sigma, int max_n) {
  std::array<double, kMaxDerivOrder + 1> d{};
  const double u = t / sigma;
  const double g = std::exp(-0.5 * u * u);
  const double inv = 1.0 / sigma;
  d[0] = g;
  if (max_n >= 1) d[1] = -u * inv * g;
  if (max_n >= 2) d[2] = (u * u - 1.0) * inv * inv * g;
  if (max_n >= 3) d[3] = -(u * u * u - 3.0 * u) * inv * inv * inv * g;
  if (max_n >= 4) {
    const double u2 = u * u;
    d[4] = (u2 * u2 - 6.0 * u2 + 3.0) * (inv * inv) * (inv * inv) * g;
  }
  return d;
}

inline bool beyond_cutoff(const RbfUnit& unit, Point2 p) noexcept {
  const double dx = p.x - unit.center.x;
  const double dy = p.y - unit.center.y;
  const double r = kCutoffWidths * unit.width;
  return dx * dx + dy * dy > r * r;
}

}  // namespace

double gaussian_deriv_1d(double t, double sigma, int n) {
  if (n < 0 || n > kMaxDerivOrder) throw UnsupportedOrder("1-D Gaussian derivative order out of range");
  return gaussian_derivs(t, sigma, n)[n];
}

double eval(const RbfUnit& unit, Point2 p) {
  if (beyond_cutoff(unit, p)) return 0.0;
  const double dx = p.x - unit.center.x;
  const double dy = p.y - unit.center.y;
  return std::exp(-(dx * dx + dy * dy) / (2.0 * unit.width * unit.width));
}

double eval_deriv(const RbfUnit& unit, Point2 p, DerivOrder d) {
  check_order(d);
  if (beyond_cutoff(unit, p)) return 0.0;
  const auto gx = gaussian_derivs(p.x - unit.center.x, unit.width, d.ox);
  const auto gy = gaussian_derivs(p.y - unit.center.y, unit.width, d.oy);
  return gx[d.ox] * gy[d.oy];
}

void eval_row_into(const RbfBasis& basis, Point2 p, std::span<const DerivTerm> terms, std::span<double> out) {
  if (basis.empty()) throw InvalidArgument("eval_row: empty basis");
  if (out.size() != basis.size()) throw InvalidArgument("eval_row: output length does not match basis size");
  int max_x = 0;
  int max_y = 0;
  for (const auto& term : terms) {
    check_order(term.order);
    max_x = std::max(max_x, term.order.ox);
    max_y = std::max(max_y, term.order.oy);
  }

  const auto units = basis.units();
  for (std::size_t i = 0; i < units.size(); ++i) {
    const RbfUnit& unit = units[i];
    if (beyond_cutoff(unit, p)) {
      out[i] = 0.0;
      continue;
    }
    const auto gx = gaussian_derivs(p.x - unit.center.x, unit.width, max_x);
    const auto gy = gaussian_derivs(p.y - unit.center.y, unit.width, max_y);
    double acc = 0.0;
    for (const auto& term : terms) acc += term.coeff * gx[term.order.ox] * gy[term.order.oy];
    out[i] = acc;
  }
}

std::vector<double> eval_row(const RbfBasis& basis, Point2 p, std::span<const DerivTerm> terms) {
  std::vector<double> row(basis.size());
  eval_row_into(basis, p, terms, row);
  return row;
}

}  // namespace rbfpielm
