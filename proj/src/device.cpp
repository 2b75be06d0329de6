#include "squid/device.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "squid/numerics.hpp"

namespace squid {

namespace {
constexpr double kTolGrad = 1e-12;       // |u'| tolerance at stationary points
constexpr double kMinWellCurv = 1e-9;    // bistable window guard on u''(min)/2
constexpr double kTopDegeneracy = 1e-9;  // u_top - eps below this is degenerate

void require_positive(double v, const char* name) {
  if (!(v > 0.0))
    throw parameter_domain_error(std::string(name) + " must be > 0");
}
void require_nonnegative(double v, const char* name) {
  if (!(v >= 0.0))
    throw parameter_domain_error(std::string(name) + " must be >= 0");
}
}  // namespace

void validate(const DeviceParams& p) {
  require_positive(p.L, "L");
  require_positive(p.C, "C");
  require_positive(p.R_eff, "R_eff");
  require_nonnegative(p.T, "T");
  require_nonnegative(p.nu, "nu");
  require_nonnegative(p.I_amp, "I_amp");
  if (!std::isfinite(p.beta_L) || !std::isfinite(p.phi_x))
    throw parameter_domain_error("beta_L and phi_x must be finite");
}

DerivedScales derive_scales(const DeviceParams& p) {
  validate(p);
  using namespace consts;
  DerivedScales s;
  const double phi0_over_2pi = Phi0 / (2.0 * std::numbers::pi);
  s.U0 = phi0_over_2pi * phi0_over_2pi / p.L;
  const double hbar_over_2e = hbar / (2.0 * e_charge);
  s.M = hbar_over_2e * hbar_over_2e * p.C;
  s.Ic = p.beta_L * Phi0 / (2.0 * std::numbers::pi * p.L);
  s.eta = std::sqrt(2.0 * s.M * s.U0) / hbar;
  return s;
}

PotentialGeometry stationary_points(const DeviceParams& p, const DerivedScales& s) {
  (void)s;
  if (!(p.beta_L > 1.0))
    throw bistability_lost_error(p.phi_x, "beta_L <= 1: single well for every bias");

  // u' is monotone between the inflection points +-phi_c (where u'' = 0);
  // the barrier top lives on the decreasing middle branch, the minima on the
  // increasing outer branches. Both edges must straddle zero or a minimum has
  // merged with the maximum.
  const double phi_c = std::acos(1.0 / p.beta_L);
  if (!(u_pot_d1(p, -phi_c) > 0.0 && u_pot_d1(p, phi_c) < 0.0))
    throw bistability_lost_error(p.phi_x, "no double well at phi_x=" + std::to_string(p.phi_x));

  // Symmetric-case well offset phi_m0: root of phi = beta_L sin(phi) in (0, pi).
  const double phi_m0 = num::brent_root(
      [&](double phi) { return phi - p.beta_L * std::sin(phi); },
      phi_c, std::numbers::pi);

  auto grad = [&](double phi) {
    return std::pair<double, double>{u_pot_d1(p, phi), u_pot_d2(p, phi)};
  };

  const double pi = std::numbers::pi;
  const double seeds[3] = {p.phi_x - phi_m0, p.phi_x, p.phi_x + phi_m0};
  const double lo[3] = {-phi_c - pi, -phi_c, phi_c};
  const double hi[3] = {-phi_c, phi_c, phi_c + pi};
  double roots[3];
  for (int i = 0; i < 3; ++i)
    roots[i] = num::safeguarded_newton(grad, seeds[i], lo[i], hi[i], kTolGrad);

  PotentialGeometry g;
  g.phi_min_left = roots[0];
  g.phi_top = roots[1];
  g.phi_min_right = roots[2];

  const double curv_left = 0.5 * u_pot_d2(p, g.phi_min_left);
  const double curv_top = -0.5 * u_pot_d2(p, g.phi_top);
  const double curv_right = 0.5 * u_pot_d2(p, g.phi_min_right);
  if (!(curv_left > kMinWellCurv) || !(curv_right > kMinWellCurv) ||
      !(curv_top > 0.0) ||
      !(g.phi_min_left < g.phi_top && g.phi_top < g.phi_min_right))
    throw bistability_lost_error(p.phi_x, "no double well at phi_x=" + std::to_string(p.phi_x));

  g.u_min_left = u_pot(p, g.phi_min_left);
  g.u_min_right = u_pot(p, g.phi_min_right);
  g.u_top = u_pot(p, g.phi_top);
  g.u1 = curv_top;  // equals (beta_L cos(phi_top) - 1)/2
  g.u1_min_left = curv_left;
  g.u1_min_right = curv_right;
  if (!(g.u_top > std::max(g.u_min_left, g.u_min_right)))
    throw bistability_lost_error(p.phi_x, "degenerate barrier");
  return g;
}

namespace {

// March outward from phi0 in direction dir until u > eps, then bracket.
double outer_turning_point(const DeviceParams& p, double eps, double phi0, double dir) {
  double step = 0.1;
  double a = phi0, b = phi0 + dir * step;
  while (u_pot(p, b) < eps) {
    a = b;
    step *= 1.5;
    b += dir * step;
  }
  auto f = [&](double phi) { return u_pot(p, phi) - eps; };
  return (dir > 0) ? num::brent_root(f, a, b) : num::brent_root(f, b, a);
}

}  // namespace

WellInterval well_turning_points(double eps, const PotentialGeometry& g,
                                 const DeviceParams& p, bool left_well) {
  const double u_min = left_well ? g.u_min_left : g.u_min_right;
  const double phi_min = left_well ? g.phi_min_left : g.phi_min_right;
  if (!(eps > u_min))
    throw energy_domain_error("energy below well bottom");
  if (!(eps < g.u_top))
    throw energy_domain_error("energy above barrier top");
  auto f = [&](double phi) { return u_pot(p, phi) - eps; };
  WellInterval w;
  if (left_well) {
    w.lo = outer_turning_point(p, eps, phi_min, -1.0);
    w.hi = num::brent_root(f, phi_min, g.phi_top);
  } else {
    w.lo = num::brent_root(f, g.phi_top, phi_min);
    w.hi = outer_turning_point(p, eps, phi_min, +1.0);
  }
  return w;
}

TurningPoints turning_points(double eps, const PotentialGeometry& g, const DeviceParams& p) {
  if (!(eps > std::max(g.u_min_left, g.u_min_right)))
    throw energy_domain_error("energy below the higher well bottom");
  if (!(eps < g.u_top))
    throw energy_domain_error("energy at or above the barrier top");
  if (g.u_top - eps < kTopDegeneracy)
    throw degenerate_turning_point_error(
        "energy within tolerance of the barrier top; use the near-top forms");

  TurningPoints t;
  t.eps = eps;
  const WellInterval l = well_turning_points(eps, g, p, true);
  const WellInterval r = well_turning_points(eps, g, p, false);
  t.phi1 = l.lo;
  t.phi2 = l.hi;
  t.phi3 = r.lo;
  t.phi4 = r.hi;
  t.tilde_phi1 = outer_turning_point(p, g.u_top, g.phi_min_left, -1.0);
  t.tilde_phi4 = outer_turning_point(p, g.u_top, g.phi_min_right, +1.0);
  return t;
}

Device Device::make(const DeviceParams& p) {
  Device d;
  d.params = p;
  d.scales = derive_scales(p);
  d.geom = stationary_points(p, d.scales);
  d.scales.Omega_p_left = std::sqrt(2.0 * d.geom.u1_min_left * d.scales.U0 / d.scales.M);
  d.scales.Omega_p_right = std::sqrt(2.0 * d.geom.u1_min_right * d.scales.U0 / d.scales.M);
  return d;
}

}  // namespace squid
