#pragma once

#include "squid/device.hpp"

namespace squid {

// Per-geometry basis for the near-top action expansion: the full-barrier
// reference actions and the regularized (singularity-subtracted) integrals.
// Everything here is independent of the level energy, so one basis serves all
// level searches at a fixed bias.
struct ActionBasis {
  double eta = 0.0;
  double u_top = 0.0;
  double u1 = 0.0;
  double phi_top = 0.0;
  double tilde_phi1 = 0.0;   // outer left turning point at eps = u_top
  double tilde_phi4 = 0.0;   // outer right turning point at eps = u_top
  double width_left = 0.0;   // phi_top - tilde_phi1
  double width_right = 0.0;  // tilde_phi4 - phi_top
  double full_left = 0.0;    // eta * int sqrt(u_top - u), left half-barrier
  double full_right = 0.0;
  double reg_left = 0.0;     // int (1/sqrt(u_top-u) - singular model), left
  double reg_right = 0.0;

  double lambda(double eps) const;
  // Subtracted in-well actions (dimensionless, hbar units).
  double action_left(double eps) const;
  double action_right(double eps) const;
  // Phase functions: action + lambda/4 (1 + ln(2/lambda)).
  double phase_left(double eps) const;
  double phase_right(double eps) const;
};

ActionBasis make_action_basis(const Device& d);

// One-energy bundle of the action quantities.
struct ActionPair {
  double eps = 0.0;
  double Phi1 = 0.0, Phi2 = 0.0;
  double S_left_raw = 0.0, S_right_raw = 0.0;
  double lambda = 0.0;
};

// Requires max(u_min) < eps <= u_top.
ActionPair action_integrals(double eps, const Device& d, const ActionBasis& basis);

// Level condition near the barrier top:
// cos(S_R - S_L) + sqrt(1+e^{-pi lam}) cos(chi + lam/2 + (lam/2) ln(2/lam) + S_R + S_L).
double quantization_residual(double eps, const ActionBasis& basis);

// Direct adaptive quadrature of eta * int_well sqrt(eps - u) dphi (no
// subtraction); reference route, also used for deep levels.
double raw_well_action(const Device& d, double eps, bool left_well);

// int_well dphi / sqrt(eps - u): the normalization integral behind the
// quasiclassical G factors (G^2 = I/(2 eta) in reduced units).
double well_inv_sqrt_integral(const Device& d, double eps, bool left_well);

// Numerically stable u_top - u(phi_top + s*delta) for the double-well
// potential; exact trig rearrangement, no cancellation near delta = 0.
double barrier_drop(const PotentialGeometry& g, const DeviceParams& p,
                    double delta, double side_sign);

}  // namespace squid
