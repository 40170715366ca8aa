#pragma once

#include <vector>

#include "steklov/common.hpp"

namespace steklov {

// Two-piece constant density on (-1, 1): rho = 4 - 3t on x < 0 and 1 + 3t on
// x >= 0, a mass-preserving family (rho_minus + rho_plus = 5) interpolating
// between the two orderings of the same pair of values.
struct PiecewiseDensity {
  double t = 0.0;
  double rho_minus = 4.0;
  double rho_plus = 1.0;
};

PiecewiseDensity make_piecewise(double t);

// Characteristic function of the fixed-membrane problem -u'' = lambda rho u,
// u(-1) = u(1) = 0: f(lambda; t) = q tan(s p) + p tan(s q) with p =
// sqrt(rho_minus), q = sqrt(rho_plus), s = sqrt(lambda). Eigenvalues are its
// roots. Throws when either tangent argument is within 1e-10 of a pole.
double f_eval(double lambda, double t);

// k-th eigenvalue (k >= 1) by scanning the cleared-denominator form
// d(s) = q sin(sp) cos(sq) + p cos(sp) sin(sq), whose zeros in s > 0 are
// exactly the eigenvalue square roots, then bisecting each bracket.
// t may overshoot [0, 1] by up to 0.05 (both densities stay positive), which
// keeps central finite differences evaluable at the endpoints.
double eigenvalue(int k, double t);

// Closed forms at t = 0 (p = 2, q = 1), by residue class of k mod 3:
// (floor(k/3) pi + atan sqrt 2)^2, (floor(k/3) pi + pi - atan sqrt 2)^2,
// (k pi / 3)^2.
double closed_form_t0(int k);

// d lambda_k / dt at t = 0 via implicit differentiation of f:
// -f_t / f_lambda with f_t = -(3/4)(-3 sqrt(eta) + 5 tan sqrt(eta)),
// f_lambda = (sec^2(2 sqrt(eta)) + sec^2(sqrt(eta))) / sqrt(eta),
// eta = lambda_k(0).
double derivative_t0(int k);

// Witness that g(t) = 1 / lambda_2(t) is not convex on [0, 1]: g is symmetric
// with equal endpoints yet rises strictly above them in the interior.
struct NonconvexityReport {
  double lambda2_t0 = 0.0;       // lambda_2(0), checked against the closed form
  double closed_form_residual = 0.0;
  double symmetry_residual = 0.0;  // max |lambda_2(t) - lambda_2(1-t)|, t in {0.1, 0.3}
  double endpoint_residual = 0.0;  // |g(0) - g(1)|
  double g0 = 0.0;
  double g01 = 0.0;              // g(0.1)
  double g1 = 0.0;
  double margin = 0.0;           // g(0.1) - g(0), must exceed 1e-4
  double witness[3] = {0.0, 0.1, 1.0};
  bool pass = false;
};

NonconvexityReport nonconvexity_certificate();

}  // namespace steklov
