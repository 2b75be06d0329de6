#pragma once

#include <vector>

#include "squid/actions.hpp"
#include "squid/device.hpp"

namespace squid {

// One delocalized near-top level: energy (U0 units), barrier parameter,
// right-well amplitude factor B and the normalization factors. G is the
// two-well normalization, g_left/g_right the single-well pieces at this
// energy (G^2 = g_left^2 + B^2 g_right^2).
struct NearTopLevel {
  double eps = 0.0;
  double lambda = 0.0;
  double B = 0.0;
  double G = 0.0;
  double g_left = 0.0;
  double g_right = 0.0;
};

// The two delocalized levels closest to the barrier top; f1 is the upper.
struct NearTopPair {
  NearTopLevel f1, f2;
};

// All roots of the level condition in (eps_lo, eps_hi), ascending.
// Scans on a uniform grid (default 2000 points) and bisects each bracket.
std::vector<double> scan_level_roots(const ActionBasis& basis, double eps_lo,
                                     double eps_hi, int grid_points = 2000);

// The two highest roots in the window, dressed with B and the G factors.
// Throws not_enough_levels_error when the window holds fewer than two roots.
NearTopPair near_top_levels(const Device& d, const ActionBasis& basis,
                            double eps_lo, double eps_hi);

// Localized levels entering the kinetics: the left-well ground state and the
// highest single-well Bohr-Sommerfeld level below the ceiling in each well.
struct WellLevels {
  double eps_0 = 0.0;  // harmonic ground estimate, left well
  double eps_L = 0.0;
  double eps_R = 0.0;
  int n_left = 0;   // Bohr-Sommerfeld counts strictly below the ceiling
  int n_right = 0;
};

WellLevels well_levels(const Device& d, double eps_ceiling);

// Anticrossing of the two phase conditions. alpha/beta are the Taylor
// coefficients of Phi_i + chi/2 in (phi_x, eps); beta is per U0, gap in U0
// units.
struct CrossingPoint {
  double phi_x0 = 0.0;
  double eps0 = 0.0;
  double lambda0 = 0.0;
  int k1 = 0, k2 = 0;
  double alpha1 = 0.0, alpha2 = 0.0;
  double beta1 = 0.0, beta2 = 0.0;
  double gap = 0.0;
  double homega_red = 0.0;  // min-well hbar Omega_p / U0 at the crossing
};

CrossingPoint crossing_point(const DeviceParams& base, double seed_phi_x,
                             double search_halfwidth = 0.15);

// Appendix-style closed forms for the Taylor coefficients at (phi_x, eps),
// exposed for the finite-difference cross checks.
struct PhaseSlopes {
  double alpha1, alpha2, beta1, beta2;
};
PhaseSlopes phase_slopes(const Device& d, const ActionBasis& basis, double eps);

// Hyperbola branches of the two-level spectrum near the crossing;
// offsets from eps0 in U0 units, dE_plus >= dE_minus.
struct HyperbolaLevels {
  double dE_plus = 0.0;
  double dE_minus = 0.0;
  bool extrapolation_warning = false;  // |dE| beyond 0.5 hbar Omega_p
};
HyperbolaLevels hyperbola_spectrum(double delta_phi_x, const CrossingPoint& c);

}  // namespace squid
