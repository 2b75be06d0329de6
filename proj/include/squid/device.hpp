#pragma once

#include <cmath>

#include "squid/constants.hpp"
#include "squid/errors.hpp"

namespace squid {

// SI inputs of an rf-SQUID under microwave drive.
struct DeviceParams {
  double beta_L = 0.0;  // screening parameter 2*pi*L*Ic/Phi0
  double L = 0.0;       // loop inductance, H
  double C = 0.0;       // junction capacitance, F
  double R_eff = 0.0;   // effective shunt resistance, Ohm
  double T = 0.0;       // bath temperature, K
  double phi_x = 0.0;   // dimensionless external flux bias
  double nu = 0.0;      // drive frequency, Hz
  double I_amp = 0.0;   // drive amplitude, A
};

// Throws parameter_domain_error naming the offending field.
void validate(const DeviceParams& p);

// Scales derived from the SI inputs. Omega_p_* need the well curvatures and
// are filled in by Device::make once the geometry is known.
struct DerivedScales {
  double U0 = 0.0;   // (Phi0/2pi)^2 / L, J
  double M = 0.0;    // (hbar/2e)^2 * C, J s^2
  double Ic = 0.0;   // beta_L * Phi0 / (2 pi L), A
  double eta = 0.0;  // sqrt(2 M U0)/hbar, dimensionless action scale
  double Omega_p_left = 0.0;   // rad/s
  double Omega_p_right = 0.0;  // rad/s
};

DerivedScales derive_scales(const DeviceParams& p);

// Reduced potential u(phi) = U/U0 = (phi-phi_x)^2/2 + beta_L cos(phi)
// and its phi derivatives.
inline double u_pot(const DeviceParams& p, double phi) {
  const double d = phi - p.phi_x;
  return 0.5 * d * d + p.beta_L * std::cos(phi);
}
inline double u_pot_d1(const DeviceParams& p, double phi) {
  return (phi - p.phi_x) - p.beta_L * std::sin(phi);
}
inline double u_pot_d2(const DeviceParams& p, double phi) {
  return 1.0 - p.beta_L * std::cos(phi);
}

// SI variants, J / J per unit phi / ...
inline double potential(const DeviceParams& p, const DerivedScales& s, double phi) {
  return s.U0 * u_pot(p, phi);
}
inline double potential_d1(const DeviceParams& p, const DerivedScales& s, double phi) {
  return s.U0 * u_pot_d1(p, phi);
}
inline double potential_d2(const DeviceParams& p, const DerivedScales& s, double phi) {
  return s.U0 * u_pot_d2(p, phi);
}

// Stationary points and curvatures of the double well. Energies are in units
// of U0; u1 is the barrier-top curvature parameter (-u''(phi_top)/2), and
// u1_min_* the well expansion coefficients u(phi) ~ u_min + u1_min (phi-phi_min)^2.
struct PotentialGeometry {
  double phi_min_left = 0.0;
  double phi_min_right = 0.0;
  double phi_top = 0.0;
  double u_min_left = 0.0;
  double u_min_right = 0.0;
  double u_top = 0.0;
  double u1 = 0.0;
  double u1_min_left = 0.0;
  double u1_min_right = 0.0;

  double barrier_left() const { return u_top - u_min_left; }
  double barrier_right() const { return u_top - u_min_right; }
};

// Requires beta_L > 1 and phi_x inside the bistable window; otherwise throws
// bistability_lost_error carrying the offending phi_x.
PotentialGeometry stationary_points(const DeviceParams& p, const DerivedScales& s);

// The four classical turning points u(phi_i) = eps (energies in U0 units),
// phi1 < phi2 <= phi_top <= phi3 < phi4, plus the eps = u_top limits of the
// outer pair.
struct TurningPoints {
  double eps = 0.0;
  double phi1 = 0.0, phi2 = 0.0, phi3 = 0.0, phi4 = 0.0;
  double tilde_phi1 = 0.0, tilde_phi4 = 0.0;
};

TurningPoints turning_points(double eps, const PotentialGeometry& g, const DeviceParams& p);

// Outer/inner turning points of one well only; valid for u_min_well < eps < u_top.
// Returns {left edge, right edge} of the classically allowed interval.
struct WellInterval { double lo = 0.0, hi = 0.0; };
WellInterval well_turning_points(double eps, const PotentialGeometry& g,
                                 const DeviceParams& p, bool left_well);

// Bundles params, scales and geometry for one bias point. make() validates,
// derives scales, solves the geometry and fills the plasma frequencies.
struct Device {
  DeviceParams params;
  DerivedScales scales;
  PotentialGeometry geom;

  static Device make(const DeviceParams& p);

  // hbar * Omega_p in units of U0 for the given well.
  double hbar_omega_p_red(bool left_well) const {
    const double u1m = left_well ? geom.u1_min_left : geom.u1_min_right;
    return 2.0 * std::sqrt(u1m) / scales.eta;
  }
};

}  // namespace squid
