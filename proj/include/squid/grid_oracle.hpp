#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "squid/device.hpp"

namespace squid {

// Brute-force reference: 3-point finite-difference discretization of the
// Hamiltonian on a uniform grid, lowest eigenpairs from a symmetric
// tridiagonal solve, Richardson-extrapolated under grid doubling.
struct GridSpectrum {
  std::vector<double> phi;                // finest grid
  double h = 0.0;                         // grid spacing
  std::vector<double> eps;                // extrapolated eigenvalues, U0 units
  std::vector<double> eps_raw;            // finest-grid eigenvalues
  std::vector<std::vector<double>> states;  // trapezoid-normalized, finest grid
};

// n_levels lowest eigenpairs. N is the starting grid size (doubled until the
// extrapolated eigenvalues move less than tol_conv; oracle_convergence_error
// after 3 doublings). The domain covers both wells plus enough forbidden
// region that boundary effects are below tol_conv.
GridSpectrum diagonalize(const Device& d, int n_levels, int N = 4096,
                         double tol_conv = 1e-9);

// Trapezoid-rule matrix element <i|zeta|j> on the grid states.
std::complex<double> exact_matrix_element(
    const GridSpectrum& spec, int i, int j,
    const std::function<std::complex<double>(double)>& zeta);

// Minimum splitting of the near-top doublet over phi_x in [phi_lo, phi_hi]
// by golden-section; returns (phi_x at the minimum, splitting in U0 units).
std::pair<double, double> exact_splitting_scan(const DeviceParams& base,
                                               double phi_lo, double phi_hi);

}  // namespace squid
