#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "steklov/common.hpp"

namespace steklov {

// A finite union of disjoint boundary arcs on the unit circle, described by
// midpoints and angular lengths. epsilon is the total length divided by 2*pi.
struct ArcSet {
  std::vector<double> midpoints;
  std::vector<double> lengths;
  double epsilon = 0.0;
};

// Validates disjointness (mod 2*pi), positive lengths, and total length in
// (0, 2*pi); records epsilon = total / (2*pi).
ArcSet make_arc_set(std::vector<double> midpoints, std::vector<double> lengths);

// n equally spaced arcs centered at 2*pi*l/n, each of length 2*pi*eps/n
// (total mass fraction eps).
ArcSet make_symmetric_arcs(int n_arcs, double eps);

// First-order conclusion about the constant density as a candidate extremum
// of lambda_k over the admissible class, together with the slopes of the
// resonant eigenvalue pair and (when not extremal) a witnessing perturbation.
struct PerturbationVerdict {
  int k = 0;
  Direction direction = Direction::minimize;
  std::string verdict;        // "critical" | "not-local-extremum"
  double slope_minus = 0.0;   // first-order slope of lambda_{2j-1} in |eps|
  double slope_plus = 0.0;    // first-order slope of lambda_{2j}
  int harmonic = 0;           // resonant index j for lambda_k
  std::string witness;        // perturbation direction, empty when critical
};

struct ArcMatrixResult {
  Eigen::Matrix2d m;
  double nu_min = 0.0;
  double nu_max = 0.0;
};

// Constant-density disk spectrum: lambda_{2j-1} = lambda_{2j} = j/alpha.
std::vector<double> exact_constant_spectrum(double alpha, int k_max);

// First-order shifts of the degenerate pair (lambda_{2j-1}, lambda_{2j}) under
// rho = alpha + eps*(a*cos(2j theta) + b*sin(2j theta)): the pair splits by
// +/- s with s = (j / (2 alpha^2)) * hypot(a, b). Returns (-s, +s).
std::pair<double, double> fourier_shift(int j, double alpha, double a2j, double b2j);

// Symbolic first-order classification of the constant density for lambda_k.
PerturbationVerdict criticality_verdict(int k, Direction direction, double alpha = 1.0);

// The 2x2 interaction matrix of harmonic m with a set of closed arcs:
// M = m*I + (1/(2 pi eps)) * sum_j sin(m |S_j|) * R(2 m theta_j), where
// R(phi) = [[cos phi, sin phi], [sin phi, -cos phi]]. Its eigenvalues
// (nu_min, nu_max) obey nu_min + nu_max = 2m and 0 <= nu_min <= m <= nu_max <= 2m.
ArcMatrixResult neumann_arc_matrix(int m, const ArcSet& arcs);

// Case lookup for the mixed problem with n_arcs vanishing arcs:
// n_arcs == k+1 -> "local-min", n_arcs == k -> "local-max", else "inconclusive".
std::string asymptotic_verdict(int k, int n_arcs);

}  // namespace steklov
