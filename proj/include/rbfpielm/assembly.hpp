#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include <Eigen/Dense>

#include "rbfpielm/geometry.hpp"
#include "rbfpielm/operators.hpp"
#include "rbfpielm/rbf_basis.hpp"

namespace rbfpielm {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

struct RowLabel {
  enum class Kind { Interior, Boundary };
  Kind kind = Kind::Interior;
  BoundarySide side = BoundarySide::Bottom;
  int condition = 0;  // index into the side's condition list

  friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

/// Dense over-determined system A c = b.
struct CollocationSystem {
  Matrix matrix;
  Vector rhs;
  std::vector<RowLabel> row_labels;

  std::size_t rows() const noexcept { return static_cast<std::size_t>(matrix.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(matrix.cols()); }
};

struct AssemblyOptions {
  /// Multiply interior rows (and their rhs) by min_width^4, which brings the
  /// 4th-order block to the same magnitude as the boundary rows.
  bool scale_interior = false;
};

/// Rows: interior points in input order (A = L phi_i, b = -f), then boundary
/// points in input order with one row per condition on the point's side
/// (A = B phi_i, b = g). Row fill runs in parallel with OpenMP.
CollocationSystem assemble(const PdeProblem& problem, const CollocationSet& points, const RbfBasis& basis,
                           const AssemblyOptions& options = {});

/// Single-threaded reference of assemble(); same layout, same values.
CollocationSystem assemble_serial(const PdeProblem& problem, const CollocationSet& points, const RbfBasis& basis,
                                  const AssemblyOptions& options = {});

/// Number of rows assemble() produces.
std::size_t count_rows(const PdeProblem& problem, const CollocationSet& points);

/// A c - b.
Vector residual_vector(const CollocationSystem& system, const Vector& c);

/// Binary dump: "RPLM", u32 rows, u32 cols, rows*cols f64 row-major, rows f64 rhs.
/// All little-endian.
void write_system(const CollocationSystem& system, const std::filesystem::path& path);
CollocationSystem read_system(const std::filesystem::path& path);

}  // namespace rbfpielm
