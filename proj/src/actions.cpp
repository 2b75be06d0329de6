#include "squid/actions.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "squid/numerics.hpp"
#include "squid/specfun.hpp"

namespace squid {

namespace {

constexpr double kQuadTol = 1e-11;

// delta - sin(delta) without cancellation.
double delta_minus_sin(double delta) {
  if (std::abs(delta) < 1e-2) {
    const double d2 = delta * delta;
    return delta * d2 / 6.0 *
           (1.0 - d2 / 20.0 * (1.0 - d2 / 42.0 * (1.0 - d2 / 72.0)));
  }
  return delta - std::sin(delta);
}

// 2 sin^2(delta/2) - delta^2/2  (= -delta^4/24 + ...), without cancellation.
double two_sin2_half_minus(double delta) {
  if (std::abs(delta) < 1e-1) {
    const double d2 = delta * delta;
    return -d2 * d2 / 24.0 *
           (1.0 - d2 / 30.0 * (1.0 - d2 * 3.0 / 112.0 * (1.0 - d2 / 30.0)));
  }
  const double s = std::sin(0.5 * delta);
  return 2.0 * s * s - 0.5 * delta * delta;
}

}  // namespace

double barrier_drop(const PotentialGeometry& g, const DeviceParams& p,
                    double delta, double side_sign) {
  // u_top - u(phi_top + s*delta)
  //   = -s betaL sin(phi_top) (delta - sin delta) + 2 u1 (1 - cos delta)
  //     + (2 sin^2(delta/2) - delta^2/2)
  const double bs = p.beta_L * std::sin(g.phi_top);
  const double sh = std::sin(0.5 * delta);
  const double s2 = 2.0 * sh * sh;
  return -side_sign * bs * delta_minus_sin(delta) + 2.0 * g.u1 * s2 +
         two_sin2_half_minus(delta);
}

namespace {

// Regularized integrand of the subtracted action forms on one side of the
// barrier, as a function of delta = |phi - phi_top| in (0, width):
//   D(delta) = 1/sqrt(u_top - u) - sqrt(W) / (delta sqrt(u1 (W - delta)))
// Near the top both pieces diverge like 1/delta and cancel; a conjugate
// rearrangement plus local series keep every evaluation finite and accurate.
struct RegularizedKernel {
  const PotentialGeometry& g;
  const DeviceParams& p;
  double side_sign;   // -1: left of the top, +1: right of it
  double width;       // phi_top - tilde_phi1 or tilde_phi4 - phi_top
  double phi_tilde;   // outer turning point at eps = u_top
  // Taylor of u_top - u at the outer turning point, in w = |phi - phi_tilde|.
  double t1, t2, t3, t4;
  // Series of the regularized integrand at the top, D0 + D1*delta.
  double series_d0, series_d1;

  RegularizedKernel(const PotentialGeometry& g_, const DeviceParams& p_,
                    double side_sign_, double width_, double phi_tilde_)
      : g(g_), p(p_), side_sign(side_sign_), width(width_), phi_tilde(phi_tilde_) {
    const double s = side_sign;  // phi = phi_tilde - s*w
    t1 = s * u_pot_d1(p, phi_tilde);
    t2 = -0.5 * u_pot_d2(p, phi_tilde);
    t3 = s * p.beta_L * std::sin(phi_tilde) / 6.0;
    t4 = -p.beta_L * std::cos(phi_tilde) / 24.0;
    const double pp = -s * p.beta_L * std::sin(g.phi_top) / (6.0 * g.u1);
    const double qq = -p.beta_L * std::cos(g.phi_top) / (24.0 * g.u1);
    const double rs = 1.0 / std::sqrt(g.u1);
    series_d0 = rs * (-0.5 * pp - 0.5 / width);
    series_d1 = rs * (0.375 * pp * pp - 0.5 * qq - 0.375 / (width * width));
  }

  // u_top - u with the appropriate expansion near each endpoint.
  double drop(double delta) const {
    const double w = width - delta;
    if (w < 1e-6 * width)
      return std::max(w * (t1 + w * (t2 + w * (t3 + w * t4))),
                      std::numeric_limits<double>::min());
    return barrier_drop(g, p, delta, side_sign);
  }

  double regularized(double delta) const {
    if (delta < 1e-5 * width) return series_d0 + series_d1 * delta;
    const double dr = drop(delta);
    const double rest = std::sqrt(g.u1 * (width - delta));
    if (delta < 0.5 * width) {
      // conjugate form: (a^2 - b^2)/(a + b) with the stable trig kernels
      const double a = delta * rest;
      const double b = std::sqrt(width * dr);
      const double num =
          -width * p.beta_L * std::cos(g.phi_top) * two_sin2_half_minus(delta) +
          side_sign * width * p.beta_L * std::sin(g.phi_top) * delta_minus_sin(delta) -
          g.u1 * delta * delta * delta;
      return num / ((a + b) * std::sqrt(dr) * delta * rest);
    }
    return 1.0 / std::sqrt(dr) - std::sqrt(width) / (delta * rest);
  }

  double full_barrier(double delta) const { return std::sqrt(drop(delta)); }
};

}  // namespace

ActionBasis make_action_basis(const Device& d) {
  ActionBasis b;
  b.eta = d.scales.eta;
  b.u_top = d.geom.u_top;
  b.u1 = d.geom.u1;
  b.phi_top = d.geom.phi_top;

  // Outer turning points at the top energy.
  {
    auto f = [&](double phi) { return u_pot(d.params, phi) - d.geom.u_top; };
    double step = 0.1, a = d.geom.phi_min_left, x = a - step;
    while (u_pot(d.params, x) < d.geom.u_top) { a = x; step *= 1.5; x -= step; }
    b.tilde_phi1 = num::brent_root(f, x, a);
    step = 0.1; a = d.geom.phi_min_right; x = a + step;
    while (u_pot(d.params, x) < d.geom.u_top) { a = x; step *= 1.5; x += step; }
    b.tilde_phi4 = num::brent_root(f, a, x);
  }
  b.width_left = b.phi_top - b.tilde_phi1;
  b.width_right = b.tilde_phi4 - b.phi_top;

  boost::math::quadrature::tanh_sinh<double> quad;
  for (int side = 0; side < 2; ++side) {
    const double sgn = side == 0 ? -1.0 : 1.0;
    const double width = side == 0 ? b.width_left : b.width_right;
    const double phi_tilde = side == 0 ? b.tilde_phi1 : b.tilde_phi4;
    RegularizedKernel ker(d.geom, d.params, sgn, width, phi_tilde);

    const double f_int = b.eta * quad.integrate(
        [&](double x) { return ker.full_barrier(x); }, 0.0, width, kQuadTol);
    const double r_int = quad.integrate(
        [&](double x) { return ker.regularized(x); }, 0.0, width, kQuadTol);
    if (side == 0) {
      b.full_left = f_int;
      b.reg_left = r_int;
    } else {
      b.full_right = f_int;
      b.reg_right = r_int;
    }
  }
  return b;
}

double ActionBasis::lambda(double eps) const {
  return eta * (u_top - eps) / std::sqrt(u1);
}

namespace {

// S = F - (eta/2) du r - (lam/2) [ln(8 W sqrt(u1/du)) + 1/2]
double subtracted_action(const ActionBasis& b, double eps, double full,
                         double reg, double width) {
  const double du = b.u_top - eps;
  if (du <= 0.0) return full;
  const double lam = b.eta * du / std::sqrt(b.u1);
  const double log_term = std::log(8.0 * width * std::sqrt(b.u1 / du)) + 0.5;
  return full - 0.5 * b.eta * du * reg - 0.5 * lam * log_term;
}

// lam/4 (1 + ln(2/lam)), continuous -> 0 as lam -> 0.
double lambda_phase_term(double lam) {
  if (lam <= 0.0) return 0.0;
  return 0.25 * lam * (1.0 + std::log(2.0 / lam));
}

}  // namespace

double ActionBasis::action_left(double eps) const {
  return subtracted_action(*this, eps, full_left, reg_left, width_left);
}
double ActionBasis::action_right(double eps) const {
  return subtracted_action(*this, eps, full_right, reg_right, width_right);
}
double ActionBasis::phase_left(double eps) const {
  return action_left(eps) + lambda_phase_term(lambda(eps));
}
double ActionBasis::phase_right(double eps) const {
  return action_right(eps) + lambda_phase_term(lambda(eps));
}

ActionPair action_integrals(double eps, const Device& d, const ActionBasis& basis) {
  if (!(eps > std::max(d.geom.u_min_left, d.geom.u_min_right)))
    throw energy_domain_error("action_integrals: energy below the higher well bottom");
  if (!(eps <= basis.u_top))
    throw energy_domain_error("action_integrals: energy above the barrier top");
  ActionPair a;
  a.eps = eps;
  a.lambda = basis.lambda(eps);
  a.S_left_raw = basis.action_left(eps);
  a.S_right_raw = basis.action_right(eps);
  a.Phi1 = basis.phase_left(eps);
  a.Phi2 = basis.phase_right(eps);
  return a;
}

double quantization_residual(double eps, const ActionBasis& basis) {
  const double lam = basis.lambda(eps);
  const double s_l = basis.action_left(eps);
  const double s_r = basis.action_right(eps);
  const double lam_log = (lam > 0.0) ? 0.5 * lam * (1.0 + std::log(2.0 / lam)) : 0.0;
  const double theta = chi_phase(lam).chi + lam_log + s_r + s_l;
  return std::cos(s_r - s_l) +
         std::sqrt(1.0 + std::exp(-std::numbers::pi * lam)) * std::cos(theta);
}

double raw_well_action(const Device& d, double eps, bool left_well) {
  const WellInterval w = well_turning_points(eps, d.geom, d.params, left_well);
  boost::math::quadrature::tanh_sinh<double> quad;
  const auto f = [&](double phi) {
    const double v = eps - u_pot(d.params, phi);
    return v > 0.0 ? std::sqrt(v) : 0.0;
  };
  return d.scales.eta * quad.integrate(f, w.lo, w.hi, kQuadTol);
}

double well_inv_sqrt_integral(const Device& d, double eps, bool left_well) {
  const WellInterval w = well_turning_points(eps, d.geom, d.params, left_well);
  boost::math::quadrature::tanh_sinh<double> quad;
  const auto f = [&](double phi) {
    const double v = eps - u_pot(d.params, phi);
    return v > 0.0 ? 1.0 / std::sqrt(v) : 0.0;
  };
  return quad.integrate(f, w.lo, w.hi, kQuadTol);
}

}  // namespace squid
