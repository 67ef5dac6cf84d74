#include "rbfpielm/operators.hpp"

#include <algorithm>
#include <string>

#include "rbfpielm/error.hpp"

namespace rbfpielm {

LinearPdeOperator::LinearPdeOperator(std::vector<DerivTerm> terms) {
  if (terms.empty()) throw InvalidArgument("LinearPdeOperator: at least one term required");
  for (const auto& t : terms) {
    check_order(t.order);
    auto same = std::find_if(terms_.begin(), terms_.end(), [&](const DerivTerm& e) { return e.order == t.order; });
    if (same != terms_.end())
      same->coeff += t.coeff;
    else
      terms_.push_back(t);
  }
}

int LinearPdeOperator::max_order() const noexcept {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.order.total());
  return m;
}

BoundaryCondition::BoundaryCondition(LinearPdeOperator op_, ScalarField target_)
    : op(std::move(op_)), target(std::move(target_)) {
  if (op.max_order() > kMaxBoundaryOrder)
    throw InvalidArgument("BoundaryCondition: operator order exceeds " + std::to_string(kMaxBoundaryOrder));
  if (!target) throw InvalidArgument("BoundaryCondition: empty target function");
}

LinearPdeOperator biharmonic() {
  return LinearPdeOperator({{1.0, {4, 0}}, {2.0, {2, 2}}, {1.0, {0, 4}}});
}

namespace {
ScalarField constant(double v) {
  return [v](Point2) { return v; };
}
}  // namespace

BoundaryCondition dirichlet(ScalarField value) {
  return {LinearPdeOperator({DerivTerm{1.0, {0, 0}}}), std::move(value)};
}

BoundaryCondition dirichlet(double value) { return dirichlet(constant(value)); }

BoundaryCondition normal_derivative(BoundarySide side, ScalarField value) {
  const Point2 n = outward_normal(side);
  DerivTerm term = n.x != 0.0 ? DerivTerm{n.x, {1, 0}} : DerivTerm{n.y, {0, 1}};
  return {LinearPdeOperator({term}), std::move(value)};
}

BoundaryCondition normal_derivative(BoundarySide side, double value) {
  return normal_derivative(side, constant(value));
}

BoundaryCondition tangential_y_derivative(ScalarField value) {
  return {LinearPdeOperator({DerivTerm{1.0, {0, 1}}}), std::move(value)};
}

BoundaryCondition tangential_y_derivative(double value) { return tangential_y_derivative(constant(value)); }

PdeProblem::PdeProblem(LinearPdeOperator interior_operator, ScalarField source,
                       std::map<BoundarySide, std::vector<BoundaryCondition>> conditions)
    : interior_(std::move(interior_operator)), source_(std::move(source)), conditions_(std::move(conditions)) {
  if (!source_) throw InvalidArgument("PdeProblem: empty source function");
  for (BoundarySide side : kAllSides) {
    auto it = conditions_.find(side);
    if (it == conditions_.end() || it->second.empty())
      throw InvalidArgument("PdeProblem: no boundary condition on side " + std::string(to_string(side)));
  }
}

}  // namespace rbfpielm
