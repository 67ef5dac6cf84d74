#include "rbfpielm/pai.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "rbfpielm/error.hpp"

namespace rbfpielm {

void validate(const PaiConfig& cfg) {
  if (cfg.n_units < 1) throw InvalidArgument("PaiConfig: n_units must be >= 1");
  if (!(cfg.sigma0 > 0.0) || !std::isfinite(cfg.sigma0)) throw InvalidArgument("PaiConfig: sigma0 must be > 0");
  if (!(cfg.sigmac >= 0.0) || !std::isfinite(cfg.sigmac)) throw InvalidArgument("PaiConfig: sigmac must be >= 0");
  if (!(cfg.boundary_oversample >= 1.0) || !std::isfinite(cfg.boundary_oversample))
    throw InvalidArgument("PaiConfig: boundary_oversample must be >= 1");
}

double width_heuristic(Point2 p, const PaiConfig& cfg) {
  const auto [l_min, l_max] = wall_distances(p);
  return cfg.sigma0 + cfg.sigmac * (l_min / l_max);
}

double clustered_coordinate(double u, double oversample) {
  const double c = std::cos(std::numbers::pi * u);
  const double warped = oversample == 1.0 ? c : std::copysign(std::pow(std::abs(c), 1.0 / oversample), c);
  return 0.5 * (1.0 - warped);
}

namespace {

// Open-interval uniform from the top 53 bits; never returns 0 or 1.
inline double open_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

RbfBasis place_centers_pai(const PaiConfig& cfg) {
  validate(cfg);
  std::mt19937_64 rng(cfg.seed);
  std::vector<RbfUnit> units;
  units.reserve(cfg.n_units);
  for (std::size_t i = 0; i < cfg.n_units; ++i) {
    const double ux = open_unit(rng);
    const double uy = open_unit(rng);
    const Point2 c{clustered_coordinate(ux, cfg.boundary_oversample),
                   clustered_coordinate(uy, cfg.boundary_oversample)};
    units.push_back({c, width_heuristic(c, cfg)});
  }
  return RbfBasis(std::move(units));
}

RbfBasis place_centers_uniform(const PaiConfig& cfg) {
  validate(cfg);
  std::mt19937_64 rng(cfg.seed);
  const double width = cfg.sigma0 + cfg.sigmac * 0.5;
  std::vector<RbfUnit> units;
  units.reserve(cfg.n_units);
  for (std::size_t i = 0; i < cfg.n_units; ++i) {
    const double x = open_unit(rng);
    const double y = open_unit(rng);
    units.push_back({{x, y}, width});
  }
  return RbfBasis(std::move(units));
}

}  // namespace rbfpielm
