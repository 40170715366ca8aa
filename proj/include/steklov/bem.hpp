#pragma once

#include <Eigen/Dense>

#include "steklov/geometry.hpp"

namespace steklov {

// Discretized boundary operators of the modified single layer representation
// u(x) = integral Phi(x-y) (phi(y) - mean(phi)) ds(y) + mean(phi), with
// Phi(x) = -(1/2pi) log|x| and mean(phi) = sum(phi_i w_i)/perimeter.
//
//   op_b: trace map  B[phi] = S(phi - mean) + mean        (boundary values)
//   op_a: flux map   A[phi] = K'(phi - mean) + (phi - mean)/2  (normal derivative)
//
// op_a annihilates constants; op_b maps them to themselves. The weighted
// eigenproblem A phi = lambda rho B phi is solved in the spectrum module.
struct LayerOperators {
  Eigen::MatrixXd op_a;
  Eigen::MatrixXd op_b;
  BoundaryCurve curve;
};

// Nystrom assembly. The single layer kernel is split as
//   M1(t,s) log(4 sin^2((t-s)/2)) + M2(t,s)
// with the log factor integrated by exact trigonometric weights and the smooth
// remainder by the trapezoid rule (spectrally accurate on smooth curves). The
// normal-derivative kernel is smooth; its diagonal limit is
// -curvature/(4pi) * speed.
LayerOperators assemble(const BoundaryCurve& curve);

}  // namespace steklov
