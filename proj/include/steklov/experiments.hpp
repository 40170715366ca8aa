#pragma once

#include <vector>

#include "steklov/spectrum.hpp"

namespace steklov {

struct SweepRow {
  int n_arcs = 0;
  int n_nodes = 0;
  double lambda = 0.0;  // lambda_k of the n-arc indicator density
  double limit = 0.0;   // constant-density value ceil(k/2)/alpha
};

// lambda_k of the symmetric n-arc indicator of mass fraction alpha on the unit
// disk, for each n in n_list (increasing), against the oscillation limit.
// Resolution scales with the number of arcs (at least 32 nodes per arc).
std::vector<SweepRow> homogenization_sweep(double alpha, int k,
                                           const std::vector<int>& n_list);

struct WeylRow {
  int k = 0;
  double extremal = 0.0;
  double weyl = 0.0;   // ceil(k/2)/alpha
  double ratio = 0.0;  // extremal / weyl
};

// Ratios of extremal values (indexed from k = 1) to the fixed-mass Weyl values.
std::vector<WeylRow> weyl_compare(double alpha, const std::vector<double>& extremal_values);

struct BoundCheck {
  std::vector<double> bounds;   // 2*pi*k / (alpha * perimeter)
  std::vector<double> margins;  // bound - lambda_k
  double min_margin = 0.0;
  bool pass = false;            // lambda_k <= bound + 1e-6 for all k
};

// Mass-constrained upper bound lambda_k <= 2*pi*k / (alpha * |Gamma|).
BoundCheck hps_bound_check(const SpectralResult& spec, double alpha, double perimeter);

}  // namespace steklov
