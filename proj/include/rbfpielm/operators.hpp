#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "rbfpielm/geometry.hpp"
#include "rbfpielm/rbf_basis.hpp"

namespace rbfpielm {

using ScalarField = std::function<double(Point2)>;

/// Constant-coefficient linear differential operator, sum_k a_k D^{alpha_k}.
/// Terms with equal multi-index are merged; order follows first appearance.
class LinearPdeOperator {
 public:
  explicit LinearPdeOperator(std::vector<DerivTerm> terms);

  std::span<const DerivTerm> terms() const noexcept { return terms_; }
  int max_order() const noexcept;

 private:
  std::vector<DerivTerm> terms_;
};

/// Highest total order allowed in a boundary operator.
inline constexpr int kMaxBoundaryOrder = 2;

struct BoundaryCondition {
  BoundaryCondition(LinearPdeOperator op, ScalarField target);

  LinearPdeOperator op;
  ScalarField target;
};

/// d4/dx4 + 2 d4/dx2dy2 + d4/dy4
LinearPdeOperator biharmonic();

BoundaryCondition dirichlet(ScalarField value);
BoundaryCondition dirichlet(double value);
/// Derivative along the outward normal of `side`.
BoundaryCondition normal_derivative(BoundarySide side, ScalarField value);
BoundaryCondition normal_derivative(BoundarySide side, double value);
/// d/dy on any wall; the cavity lid uses it for u = psi_y.
BoundaryCondition tangential_y_derivative(ScalarField value);
BoundaryCondition tangential_y_derivative(double value);

/// L(u) + f = 0 in the interior, B(u) = g on each wall.
class PdeProblem {
 public:
  PdeProblem(LinearPdeOperator interior_operator, ScalarField source,
             std::map<BoundarySide, std::vector<BoundaryCondition>> conditions);

  const LinearPdeOperator& interior_operator() const noexcept { return interior_; }
  double source(Point2 p) const { return source_(p); }
  const std::vector<BoundaryCondition>& conditions(BoundarySide side) const { return conditions_.at(side); }

 private:
  LinearPdeOperator interior_;
  ScalarField source_;
  std::map<BoundarySide, std::vector<BoundaryCondition>> conditions_;
};

}  // namespace rbfpielm
