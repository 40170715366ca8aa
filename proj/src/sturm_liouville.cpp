#include "steklov/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steklov {

namespace {

double dist_to_tan_pole(double x) {
  // Distance from x to the nearest pi/2 + pi*Z.
  const double r = std::remainder(x - 0.5 * pi, pi);
  return std::abs(r);
}

// Cleared-denominator characteristic function in s = sqrt(lambda): vanishes
// exactly at eigenvalues, stays finite at the tangent poles.
double d_eval(double s, double p, double q) {
  return q * std::sin(s * p) * std::cos(s * q) + p * std::cos(s * p) * std::sin(s * q);
}

}  // namespace

PiecewiseDensity make_piecewise(double t) {
  if (!(t >= -0.05 && t <= 1.05)) {
    throw InvalidArgument("t must lie in [0, 1] (up to 0.05 overshoot)");
  }
  PiecewiseDensity d;
  d.t = t;
  d.rho_minus = 4.0 - 3.0 * t;
  d.rho_plus = 1.0 + 3.0 * t;
  return d;
}

double f_eval(double lambda, double t) {
  if (!(lambda > 0.0)) throw InvalidArgument("lambda must be positive");
  const PiecewiseDensity d = make_piecewise(t);
  const double p = std::sqrt(d.rho_minus);
  const double q = std::sqrt(d.rho_plus);
  const double s = std::sqrt(lambda);
  if (dist_to_tan_pole(s * p) < 1e-10 || dist_to_tan_pole(s * q) < 1e-10) {
    throw InvalidArgument("lambda is too close to a tangent pole of the "
                          "characteristic function");
  }
  return q * std::tan(s * p) + p * std::tan(s * q);
}

double eigenvalue(int k, double t) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  const PiecewiseDensity dens = make_piecewise(t);
  const double p = std::sqrt(dens.rho_minus);
  const double q = std::sqrt(dens.rho_plus);

  // Roots of d(s) are separated by at least roughly pi/(p+q) * (1 - B/A) with
  // A = (p+q)/2, B = |p-q|/2, far above the scan step.
  const double step = 5e-4;
  const double s_max = (k + 2) * pi / (p + q) + 1.0;
  int found = 0;
  double prev_s = step;
  double prev_d = d_eval(prev_s, p, q);
  for (double s = 2 * step; s <= s_max; s += step) {
    const double cur_d = d_eval(s, p, q);
    if (prev_d == 0.0 || (prev_d < 0.0) != (cur_d < 0.0)) {
      double lo = prev_s, hi = s, flo = prev_d;
      if (flo == 0.0) {
        hi = lo;
      } else {
        for (int it = 0; it < 100; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = d_eval(mid, p, q);
          if (fm == 0.0) {
            lo = hi = mid;
            break;
          }
          if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
      }
      if (++found == k) {
        const double s_root = 0.5 * (lo + hi);
        return s_root * s_root;
      }
    }
    prev_s = s;
    prev_d = cur_d;
  }
  throw SolverError("root scan exhausted at s = " + std::to_string(s_max) +
                    " with " + std::to_string(found) + " roots found");
}

double closed_form_t0(int k) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  const double at = std::atan(std::sqrt(2.0));
  const double base = (k / 3) * pi;
  double s = 0.0;
  switch (k % 3) {
    case 1: s = base + at; break;
    case 2: s = base + pi - at; break;
    default: s = base; break;  // k divisible by 3: s = (k/3) pi
  }
  return s * s;
}

double derivative_t0(int k) {
  const double eta = closed_form_t0(k);
  const double r = std::sqrt(eta);
  const double f_t = -0.75 * (-3.0 * r + 5.0 * std::tan(r));
  const double sec1 = 1.0 / std::cos(2.0 * r);
  const double sec2 = 1.0 / std::cos(r);
  const double f_lambda = (sec1 * sec1 + sec2 * sec2) / r;
  return -f_t / f_lambda;
}

NonconvexityReport nonconvexity_certificate() {
  NonconvexityReport rep;
  rep.lambda2_t0 = eigenvalue(2, 0.0);
  rep.closed_form_residual = std::abs(rep.lambda2_t0 - closed_form_t0(2));
  for (double t : {0.1, 0.3}) {
    rep.symmetry_residual =
        std::max(rep.symmetry_residual, std::abs(eigenvalue(2, t) - eigenvalue(2, 1.0 - t)));
  }
  rep.g0 = 1.0 / rep.lambda2_t0;
  rep.g01 = 1.0 / eigenvalue(2, 0.1);
  rep.g1 = 1.0 / eigenvalue(2, 1.0);
  rep.endpoint_residual = std::abs(rep.g0 - rep.g1);
  rep.margin = rep.g01 - rep.g0;
  // A convex function with equal endpoint values cannot exceed them inside.
  rep.pass = rep.closed_form_residual <= 1e-10 && rep.symmetry_residual <= 1e-10 &&
             rep.endpoint_residual <= 1e-10 && rep.margin > 1e-4;
  return rep;
}

}  // namespace steklov
