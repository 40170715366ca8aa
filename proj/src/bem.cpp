#include "steklov/bem.hpp"

#include <cmath>
#include <vector>

namespace steklov {

namespace {

// Quadrature weights R_d for integrating f(s) log(4 sin^2((t-s)/2)) ds against
// equispaced nodes: R_d = -(4pi/N) sum_{m=1}^{N/2-1} cos(m s_d)/m
//                         - (4pi/N^2) cos(N s_d / 2),  s_d = 2 pi d / N.
// Exact for trigonometric polynomials of degree < N/2.
std::vector<double> kress_log_weights(int n) {
  std::vector<double> r(n);
  for (int d = 0; d < n; ++d) {
    const double sd = 2.0 * pi * d / n;
    double acc = 0.0;
    for (int m = 1; m < n / 2; ++m) acc += std::cos(m * sd) / m;
    r[d] = -(4.0 * pi / n) * acc - (4.0 * pi / (n * n)) * ((d % 2 == 0) ? 1.0 : -1.0);
  }
  return r;
}

}  // namespace

LayerOperators assemble(const BoundaryCurve& curve) {
  const int n = curve.n_nodes;
  const double h = 2.0 * pi / n;
  const std::vector<double> logw = kress_log_weights(n);

  Eigen::MatrixXd s_mat(n, n);   // single layer
  Eigen::MatrixXd kp_mat(n, n);  // normal-derivative kernel times trapezoid weight
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double m1 = -curve.speed[j] / (4.0 * pi);
      if (i == j) {
        const double m2 = -curve.speed[i] * std::log(curve.speed[i]) / (2.0 * pi);
        s_mat(i, j) = logw[0] * m1 + h * m2;
        kp_mat(i, j) = h * (-curve.curvature[i] * curve.speed[i] / (4.0 * pi));
        continue;
      }
      const double dx = curve.x[i] - curve.x[j];
      const double dy = curve.y[i] - curve.y[j];
      const double dist2 = dx * dx + dy * dy;
      const double half = std::sin(0.5 * (curve.theta[i] - curve.theta[j]));
      const double sin2 = 4.0 * half * half;
      const double m2 = -curve.speed[j] * std::log(dist2 / sin2) / (4.0 * pi);
      const int d = (i - j + n) % n;
      s_mat(i, j) = logw[d] * m1 + h * m2;
      const double dot = dx * curve.normal_x[i] + dy * curve.normal_y[i];
      kp_mat(i, j) = h * (-(dot / dist2) * curve.speed[j] / (2.0 * pi));
    }
  }

  // Mean projector P phi = (sum phi_j w_j / perimeter) * ones.
  Eigen::MatrixXd proj = Eigen::VectorXd::Ones(n) *
                         (curve.weight.matrix().transpose() / curve.perimeter);
  Eigen::MatrixXd demean = Eigen::MatrixXd::Identity(n, n) - proj;

  LayerOperators ops;
  ops.op_b = s_mat * demean + proj;
  ops.op_a = (kp_mat + 0.5 * Eigen::MatrixXd::Identity(n, n)) * demean;
  ops.curve = curve;
  return ops;
}

}  // namespace steklov
