#pragma once

#include <Eigen/Dense>
#include <vector>

#include "steklov/common.hpp"

namespace steklov {

// Smooth closed planar curve sampled at equispaced parameter nodes
// theta_i = 2*pi*i/n_nodes. Immutable after construction; all arrays have
// length n_nodes. Weights are arclength quadrature weights
// w_i = (2*pi/n_nodes)*speed_i, so sum(f_i * w_i) is the periodic trapezoid
// rule for the boundary integral of f.
struct BoundaryCurve {
  int n_nodes = 0;
  Eigen::ArrayXd theta;
  Eigen::ArrayXd x, y;                // positions
  Eigen::ArrayXd speed;               // |x'(theta)|, strictly positive
  Eigen::ArrayXd normal_x, normal_y;  // outward unit normals
  Eigen::ArrayXd curvature;           // signed curvature, positive for the disk
  Eigen::ArrayXd weight;
  double perimeter = 0.0;
  bool is_disk = false;
  std::vector<double> cos_coeffs, sin_coeffs;  // radius coefficients, empty for the disk
};

// Unit circle. n_nodes must be even and >= 16.
BoundaryCurve make_disk(int n_nodes);

// Star-shaped curve r(theta) = 1 + sum_m (a_m cos(m theta) + b_m sin(m theta)).
// Rejects coefficient sets whose radius dips to 0.05 or below. Empty lists
// reproduce make_disk exactly.
BoundaryCurve make_fourier_curve(const std::vector<double>& cos_coeffs,
                                 const std::vector<double>& sin_coeffs, int n_nodes);

// sum(samples_i * weight_i); samples length must equal n_nodes.
double boundary_integral(const BoundaryCurve& curve, const Eigen::ArrayXd& samples);

namespace detail {

// Minimum-size bypass for tests; n_nodes must still be even and >= 4.
BoundaryCurve make_disk_any(int n_nodes);
BoundaryCurve make_fourier_any(const std::vector<double>& cos_coeffs,
                               const std::vector<double>& sin_coeffs, int n_nodes);

}  // namespace detail

}  // namespace steklov
