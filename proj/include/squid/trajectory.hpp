#pragma once

#include <vector>

#include "squid/device.hpp"

namespace squid {

// Half-period classical trajectory in one well at fixed energy. Samples run
// from the lower-phi turning point (t = 0) to the upper one (t = period/2),
// graded toward both turning points by the s^2 endpoint substitution.
// `weight` are quadrature weights in seconds: sum w_j f(phi_j, t_j)
// approximates the half-period time integral of f.
struct Trajectory {
  double eps = 0.0;
  bool left_well = true;
  double period = 0.0;  // seconds
  std::vector<double> t;
  std::vector<double> phi;
  std::vector<double> weight;
};

// n_samples is the total sample count over the half period (odd; two Simpson
// grids meeting at the well bottom).
Trajectory classical_trajectory(double eps, bool left_well, const Device& d,
                                int n_samples = 4097);

// Period from the independent inverse-sqrt quadrature route (the cross-check
// for Trajectory::period).
double period_by_quadrature(double eps, bool left_well, const Device& d);

}  // namespace squid
