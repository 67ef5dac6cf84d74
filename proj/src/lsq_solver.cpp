#include "rbfpielm/lsq_solver.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "rbfpielm/error.hpp"

namespace rbfpielm {

namespace {

void check_inputs(const Matrix& a, const Vector& b, double rcond) {
  if (a.rows() == 0 || a.cols() == 0) throw InvalidArgument("solve_least_squares: empty matrix");
  if (a.rows() != b.size()) throw InvalidArgument("solve_least_squares: rhs length does not match matrix rows");
  if (!(rcond >= 0.0 && rcond < 1.0)) throw InvalidArgument("solve_least_squares: rcond must lie in [0, 1)");
}

}  // namespace

void fill_residual_stats(const Matrix& a, const Vector& b, SolveReport& report) {
  const Vector r = a * report.coefficients - b;
  report.residual_norm = r.norm();
  report.residual_rms = report.residual_norm / std::sqrt(static_cast<double>(r.size()));
  report.residual_mean_abs = r.cwiseAbs().mean();
}

namespace {

using ColMatrix = Eigen::MatrixXd;

struct TruncatedSvd {
  ColMatrix u;  // columns span range(A) in the coordinates given to the SVD
  Vector s;
  ColMatrix v;
};

TruncatedSvd thin_svd(const ColMatrix& a) {
  Eigen::BDCSVD<ColMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) throw NumericalFailure("SVD failed to converge");
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

}  // namespace

SolveReport solve_least_squares(const Matrix& a, const Vector& b, double rcond) {
  check_inputs(a, b, rcond);
  const auto start = std::chrono::steady_clock::now();

  // Tall systems: A = Q R, so A and R share singular values and right
  // singular vectors, and A^+ b = R^+ (Q^T b).
  TruncatedSvd svd;
  Vector rhs;
  if (a.rows() > a.cols()) {
    Eigen::HouseholderQR<ColMatrix> qr(a);
    const Eigen::Index n = a.cols();
    svd = thin_svd(qr.matrixQR().topRows(n).triangularView<Eigen::Upper>());
    rhs = (qr.householderQ().transpose() * b).head(n);
  } else {
    svd = thin_svd(a);
    rhs = b;
  }

  const Eigen::Index k = svd.s.size();
  const double s_max = k > 0 ? svd.s[0] : 0.0;
  const double cutoff = rcond * s_max;
  int rank = 0;
  while (rank < k && svd.s[rank] > cutoff && svd.s[rank] > 0.0) ++rank;
  if (rank == 0) throw RankZero("solve_least_squares: all singular values are below the cutoff");

  // c = V_r diag(1/s_r) U_r^T rhs
  Vector proj = svd.u.leftCols(rank).transpose() * rhs;
  for (int i = 0; i < rank; ++i) proj[i] /= svd.s[i];
  SolveReport report;
  report.coefficients = svd.v.leftCols(rank) * proj;
  report.effective_rank = rank;
  report.condition_number = s_max / svd.s[rank - 1];
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  fill_residual_stats(a, b, report);
  return report;
}

SolveReport solve_least_squares(const CollocationSystem& system, double rcond) {
  return solve_least_squares(system.matrix, system.rhs, rcond);
}

Vector pseudo_inverse_solve_reference(const Matrix& a, const Vector& b, double rcond) {
  check_inputs(a, b, rcond);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double cutoff = rcond * s[0];
  Vector c = Vector::Zero(a.cols());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (!(s[i] > cutoff) || s[i] == 0.0) break;
    c += svd.matrixV().col(i) * (svd.matrixU().col(i).dot(b) / s[i]);
  }
  return c;
}

}  // namespace rbfpielm
