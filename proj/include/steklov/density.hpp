#pragma once

#include <Eigen/Dense>
#include <vector>

#include "steklov/geometry.hpp"

namespace steklov {

// Admissible boundary density: values in [0,1] at the curve's nodes with
// boundary_integral(curve, values) = alpha * perimeter.
struct Density {
  Eigen::ArrayXd values;
  double alpha = 0.0;
};

// values == alpha everywhere; alpha in (0, 1].
Density make_constant(const BoundaryCurve& curve, double alpha);

// Indicator of the n evenly spaced arcs
//   [pi(2l - alpha)/n, pi(2l + alpha)/n] (mod 2pi), l = 0..n-1,
// each of angular length 2*pi*alpha/n. Disk only. The two nodes straddling
// each arc endpoint receive the exact fractional overlap of their quadrature
// cell, so the discrete mass equals alpha*2*pi to rounding.
Density make_arc_indicator(const BoundaryCurve& curve, double alpha, int n_arcs);

// alpha + eps * sum_m (a_m cos(m theta) + b_m sin(m theta)), recentred to the
// curve's weighted mean so the mass is exactly alpha*perimeter; rejects values
// leaving [0,1].
Density make_fourier_perturbed(const BoundaryCurve& curve, double alpha, double eps,
                               const std::vector<double>& cos_coeffs,
                               const std::vector<double>& sin_coeffs);

// Wraps existing nodal values after validating the box and mass invariants.
Density make_from_values(const BoundaryCurve& curve, const Eigen::ArrayXd& values,
                         double alpha);

// Weighted Euclidean projection onto {0 <= v <= 1, sum v_i w_i = alpha*perimeter}:
// clip(raw + mu, 0, 1) with the scalar shift mu found by bisection. Idempotent.
Density project_admissible(const BoundaryCurve& curve, const Eigen::ArrayXd& raw,
                           double alpha);

}  // namespace steklov
