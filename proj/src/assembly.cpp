#include "rbfpielm/assembly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <span>
#include <string>

#include "rbfpielm/error.hpp"

namespace rbfpielm {

namespace {

struct RowPlan {
  Point2 point;
  std::span<const DerivTerm> terms;
  double target;  // rhs before scaling
  double scale;
  RowLabel label;
};

// Expands points x conditions into one plan entry per row. Targets are
// evaluated here, serially, so user callbacks never run on worker threads.
std::vector<RowPlan> plan_rows(const PdeProblem& problem, const CollocationSet& points, const RbfBasis& basis,
                               const AssemblyOptions& options) {
  if (basis.empty()) throw InvalidArgument("assemble: empty basis");
  const std::size_t m = count_rows(problem, points);
  if (m <= basis.size())
    throw UnderdeterminedSystem("assemble: " + std::to_string(m) + " collocation conditions for " +
                                std::to_string(basis.size()) + " unknowns; need more conditions than units");

  double interior_scale = 1.0;
  if (options.scale_interior) {
    const double w = basis.min_width();
    interior_scale = (w * w) * (w * w);
  }

  std::vector<RowPlan> plan;
  plan.reserve(m);
  const auto interior_terms = problem.interior_operator().terms();
  for (const Point2& p : points.interior)
    plan.push_back({p, interior_terms, -problem.source(p), interior_scale, {}});
  for (const auto& bp : points.boundary) {
    const auto& conds = problem.conditions(bp.side);
    for (std::size_t k = 0; k < conds.size(); ++k)
      plan.push_back({bp.point, conds[k].op.terms(), conds[k].target(bp.point), 1.0,
                      {RowLabel::Kind::Boundary, bp.side, static_cast<int>(k)}});
  }
  return plan;
}

void fill_row(const RowPlan& row, const RbfBasis& basis, double* dst) {
  std::span<double> out(dst, basis.size());
  eval_row_into(basis, row.point, row.terms, out);
  if (row.scale != 1.0)
    for (double& v : out) v *= row.scale;
}

std::string describe(std::size_t index, const RowLabel& label) {
  std::string s = "row " + std::to_string(index);
  if (label.kind == RowLabel::Kind::Interior) return s + " (interior)";
  return s + " (boundary " + std::string(to_string(label.side)) + ", condition " + std::to_string(label.condition) +
         ")";
}

void check_finite(const CollocationSystem& sys) {
  for (Eigen::Index r = 0; r < sys.matrix.rows(); ++r) {
    if (!std::isfinite(sys.rhs[r]) || !sys.matrix.row(r).allFinite())
      throw AssemblyFailure("assemble: non-finite entry in " + describe(static_cast<std::size_t>(r), sys.row_labels[r]));
  }
}

CollocationSystem allocate(const std::vector<RowPlan>& plan, const RbfBasis& basis) {
  CollocationSystem sys;
  sys.matrix.resize(static_cast<Eigen::Index>(plan.size()), static_cast<Eigen::Index>(basis.size()));
  sys.rhs.resize(static_cast<Eigen::Index>(plan.size()));
  sys.row_labels.reserve(plan.size());
  for (std::size_t r = 0; r < plan.size(); ++r) {
    sys.rhs[static_cast<Eigen::Index>(r)] = plan[r].target * plan[r].scale;
    sys.row_labels.push_back(plan[r].label);
  }
  return sys;
}

}  // namespace

std::size_t count_rows(const PdeProblem& problem, const CollocationSet& points) {
  std::size_t m = points.interior.size();
  for (const auto& bp : points.boundary) m += problem.conditions(bp.side).size();
  return m;
}

CollocationSystem assemble(const PdeProblem& problem, const CollocationSet& points, const RbfBasis& basis,
                           const AssemblyOptions& options) {
  const auto plan = plan_rows(problem, points, basis, options);
  CollocationSystem sys = allocate(plan, basis);
  const auto rows = static_cast<std::int64_t>(plan.size());
  double* data = sys.matrix.data();
  const auto cols = static_cast<std::int64_t>(basis.size());
  // Orders and sizes were validated in plan_rows, so the kernel cannot throw here.
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < rows; ++r) fill_row(plan[r], basis, data + r * cols);
  check_finite(sys);
  return sys;
}

CollocationSystem assemble_serial(const PdeProblem& problem, const CollocationSet& points, const RbfBasis& basis,
                                  const AssemblyOptions& options) {
  const auto plan = plan_rows(problem, points, basis, options);
  CollocationSystem sys = allocate(plan, basis);
  const std::size_t cols = basis.size();
  for (std::size_t r = 0; r < plan.size(); ++r) fill_row(plan[r], basis, sys.matrix.data() + r * cols);
  check_finite(sys);
  return sys;
}

Vector residual_vector(const CollocationSystem& system, const Vector& c) {
  if (static_cast<std::size_t>(c.size()) != system.cols())
    throw InvalidArgument("residual_vector: coefficient length " + std::to_string(c.size()) + " != " +
                          std::to_string(system.cols()));
  return system.matrix * c - system.rhs;
}

namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) throw InvalidArgument("read_system: truncated file");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

constexpr char kMagic[4] = {'R', 'P', 'L', 'M'};

}  // namespace

void write_system(const CollocationSystem& system, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(kMagic, 4);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(system.rows()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(system.cols()));
  for (Eigen::Index r = 0; r < system.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < system.matrix.cols(); ++c) put_le<double>(out, system.matrix(r, c));
  for (Eigen::Index r = 0; r < system.rhs.size(); ++r) put_le<double>(out, system.rhs[r]);
  if (!out) throw Error("write failed for " + path.string());
}

CollocationSystem read_system(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) throw InvalidArgument("read_system: bad magic");
  const auto rows = get_le<std::uint32_t>(in);
  const auto cols = get_le<std::uint32_t>(in);
  CollocationSystem sys;
  sys.matrix.resize(rows, cols);
  sys.rhs.resize(rows);
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) sys.matrix(r, c) = get_le<double>(in);
  for (std::uint32_t r = 0; r < rows; ++r) sys.rhs[r] = get_le<double>(in);
  sys.row_labels.resize(rows);
  return sys;
}

}  // namespace rbfpielm
