#pragma once

#include <filesystem>
#include <vector>

#include "rbfpielm/assembly.hpp"
#include "rbfpielm/rbf_basis.hpp"

namespace rbfpielm {

/// Solved expansion u(p) = sum_i c_i phi_i(p).
class Solution {
 public:
  Solution(RbfBasis basis, Vector coefficients);

  const RbfBasis& basis() const noexcept { return basis_; }
  const Vector& coefficients() const noexcept { return coefficients_; }

  double evaluate(Point2 p, DerivOrder d = {}) const;

 private:
  RbfBasis basis_;
  Vector coefficients_;
};

/// Streamfunction sample with the derived velocity u = psi_y, v = -psi_x.
struct FieldSample {
  Point2 point;
  double psi = 0.0;
  double u = 0.0;
  double v = 0.0;
  double speed = 0.0;
};

struct ProfilePoint {
  double coord = 0.0;
  double value = 0.0;
};

struct CenterlineProfiles {
  std::vector<ProfilePoint> u_profile;  ///< (y, u(0.5, y))
  std::vector<ProfilePoint> v_profile;  ///< (x, v(x, 0.5))
};

inline constexpr int kDefaultProfileSamples = 201;
inline constexpr int kDefaultFieldGrid = 101;

FieldSample sample_field(const Solution& solution, Point2 p);

CenterlineProfiles centerline_profiles(const Solution& solution, int n_samples = kDefaultProfileSamples);

/// Uniform nx x ny samples, row-major with y as the outer loop. OpenMP over rows.
std::vector<FieldSample> field_grid(const Solution& solution, int nx = kDefaultFieldGrid, int ny = kDefaultFieldGrid);

void write_profile_csv(const std::vector<ProfilePoint>& profile, const std::filesystem::path& path);
void write_field_csv(const std::vector<FieldSample>& field, const std::filesystem::path& path);

}  // namespace rbfpielm
