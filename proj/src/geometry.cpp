#include "steklov/geometry.hpp"

#include <cmath>
#include <string>

namespace steklov {

namespace {

void check_even(int n_nodes, int minimum) {
  if (n_nodes < minimum || n_nodes % 2 != 0) {
    throw InvalidArgument("n_nodes must be even and >= " + std::to_string(minimum) +
                          ", got " + std::to_string(n_nodes));
  }
}

// r(theta) and its first two derivatives for the star-shaped radius.
void radius_eval(const std::vector<double>& ac, const std::vector<double>& as, double t,
                 double& r, double& dr, double& ddr) {
  r = 1.0;
  dr = 0.0;
  ddr = 0.0;
  for (std::size_t m = 1; m <= ac.size(); ++m) {
    const double c = std::cos(m * t), s = std::sin(m * t);
    r += ac[m - 1] * c;
    dr -= ac[m - 1] * m * s;
    ddr -= ac[m - 1] * m * m * c;
  }
  for (std::size_t m = 1; m <= as.size(); ++m) {
    const double c = std::cos(m * t), s = std::sin(m * t);
    r += as[m - 1] * s;
    dr += as[m - 1] * m * c;
    ddr -= as[m - 1] * m * m * s;
  }
}

BoundaryCurve build_fourier(const std::vector<double>& ac, const std::vector<double>& as,
                            int n_nodes) {
  // Positivity is checked on a grid much finer than the highest harmonic.
  const int n_check = 8192;
  for (int i = 0; i < n_check; ++i) {
    double r, dr, ddr;
    radius_eval(ac, as, 2.0 * pi * i / n_check, r, dr, ddr);
    if (r <= 0.05) throw InvalidArgument("radius r(theta) <= 0.05: curve rejected");
  }

  BoundaryCurve c;
  c.n_nodes = n_nodes;
  c.theta.resize(n_nodes);
  c.x.resize(n_nodes);
  c.y.resize(n_nodes);
  c.speed.resize(n_nodes);
  c.normal_x.resize(n_nodes);
  c.normal_y.resize(n_nodes);
  c.curvature.resize(n_nodes);
  c.weight.resize(n_nodes);
  c.is_disk = ac.empty() && as.empty();
  c.cos_coeffs = ac;
  c.sin_coeffs = as;

  const double h = 2.0 * pi / n_nodes;
  for (int i = 0; i < n_nodes; ++i) {
    const double t = h * i;
    double r, dr, ddr;
    radius_eval(ac, as, t, r, dr, ddr);
    const double ct = std::cos(t), st = std::sin(t);
    const double xp = dr * ct - r * st;  // x'(theta), counterclockwise
    const double yp = dr * st + r * ct;
    const double sp = std::sqrt(xp * xp + yp * yp);
    c.theta[i] = t;
    c.x[i] = r * ct;
    c.y[i] = r * st;
    c.speed[i] = sp;
    c.normal_x[i] = yp / sp;
    c.normal_y[i] = -xp / sp;
    c.curvature[i] = (r * r + 2.0 * dr * dr - r * ddr) / (sp * sp * sp);
    c.weight[i] = h * sp;
  }
  c.perimeter = c.weight.sum();
  return c;
}

}  // namespace

BoundaryCurve make_disk(int n_nodes) {
  check_even(n_nodes, 16);
  return detail::make_disk_any(n_nodes);
}

BoundaryCurve make_fourier_curve(const std::vector<double>& cos_coeffs,
                                 const std::vector<double>& sin_coeffs, int n_nodes) {
  check_even(n_nodes, 16);
  return detail::make_fourier_any(cos_coeffs, sin_coeffs, n_nodes);
}

double boundary_integral(const BoundaryCurve& curve, const Eigen::ArrayXd& samples) {
  if (samples.size() != curve.n_nodes) {
    throw InvalidArgument("boundary_integral: sample length " +
                          std::to_string(samples.size()) + " != n_nodes " +
                          std::to_string(curve.n_nodes));
  }
  return (samples * curve.weight).sum();
}

namespace detail {

BoundaryCurve make_disk_any(int n_nodes) {
  check_even(n_nodes, 4);
  return build_fourier({}, {}, n_nodes);
}

BoundaryCurve make_fourier_any(const std::vector<double>& cos_coeffs,
                               const std::vector<double>& sin_coeffs, int n_nodes) {
  check_even(n_nodes, 4);
  return build_fourier(cos_coeffs, sin_coeffs, n_nodes);
}

}  // namespace detail

}  // namespace steklov
