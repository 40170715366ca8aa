#pragma once

#include <Eigen/Dense>
#include <vector>

#include "steklov/spectrum.hpp"

namespace steklov {

// First-order stationarity certificate for an extremal candidate density: the
// cluster sum of squared eigenfunction traces F must sit below / at / above a
// common level c on the regions where the density is 0 / interior / 1 (for a
// minimizer; inequalities reversed for a maximizer).
struct OptimalityReport {
  Eigen::ArrayXd f;                 // F(theta_i) = sum over cluster of u_i^2
  double c = 0.0;                   // matched level
  std::vector<int> region;          // per node: 0 -> rho=0 band, 1 -> interior, 2 -> rho=1 band
  double violation_zero = 0.0;      // worst violation on the rho=0 band
  double violation_interior = 0.0;  // worst |F - c| on the interior
  double violation_one = 0.0;       // worst violation on the rho=1 band
  double tol_effective = 0.0;       // viol_tol * max F
  bool pass = false;
  Direction direction = Direction::minimize;
  std::vector<int> cluster;         // 0-based eigenvalue indices certified
  double band_tol = 0.0;
  double viol_tol = 0.0;
};

OptimalityReport check_optimality(const SpectralResult& spec, const Density& rho,
                                  int cluster_index, Direction direction,
                                  double band_tol = 1e-3, double viol_tol = 1e-2);

}  // namespace steklov
