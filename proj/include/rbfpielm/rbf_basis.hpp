#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "rbfpielm/geometry.hpp"

namespace rbfpielm {

/// Highest total derivative order the kernel supports.
inline constexpr int kMaxDerivOrder = 4;

/// Partial derivative multi-index: d^(ox+oy) / dx^ox dy^oy.
struct DerivOrder {
  int ox = 0;
  int oy = 0;

  constexpr int total() const noexcept { return ox + oy; }
  friend constexpr auto operator<=>(const DerivOrder&, const DerivOrder&) = default;
};

/// One weighted derivative in a linear operator.
struct DerivTerm {
  double coeff = 1.0;
  DerivOrder order;
};

/// Isotropic Gaussian exp(-|p - center|^2 / (2 width^2)).
struct RbfUnit {
  Point2 center;
  double width = 1.0;
};

/// Ordered set of Gaussian units; index i pairs with coefficient i.
class RbfBasis {
 public:
  RbfBasis() = default;
  explicit RbfBasis(std::vector<RbfUnit> units);

  std::size_t size() const noexcept { return units_.size(); }
  bool empty() const noexcept { return units_.empty(); }
  const RbfUnit& operator[](std::size_t i) const { return units_[i]; }
  std::span<const RbfUnit> units() const noexcept { return units_; }
  double min_width() const noexcept;

  friend bool operator==(const RbfBasis& a, const RbfBasis& b) noexcept;

 private:
  std::vector<RbfUnit> units_;
};

/// Beyond this many widths from the center the kernel and its derivatives are 0.
inline constexpr double kCutoffWidths = 12.0;

/// n-th derivative (n <= 4) of exp(-t^2/(2 sigma^2)) with respect to t.
double gaussian_deriv_1d(double t, double sigma, int n);

double eval(const RbfUnit& unit, Point2 p);
double eval_deriv(const RbfUnit& unit, Point2 p, DerivOrder d);

/// Row entry i = sum over terms of coeff * eval_deriv(basis[i], p, order).
std::vector<double> eval_row(const RbfBasis& basis, Point2 p, std::span<const DerivTerm> terms);

/// eval_row into a caller-owned buffer of length basis.size(); no allocation.
void eval_row_into(const RbfBasis& basis, Point2 p, std::span<const DerivTerm> terms, std::span<double> out);

/// Throws UnsupportedOrder unless 0 <= ox, oy and ox + oy <= kMaxDerivOrder.
void check_order(DerivOrder d);

}  // namespace rbfpielm
