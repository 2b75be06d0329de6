#include "squid/spectrum.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "squid/numerics.hpp"
#include "squid/specfun.hpp"

namespace squid {

namespace {

constexpr double kRootTol = 1e-12;   // bisection tolerance on eps (U0 units)
constexpr double kWellFloorPad = 1e-9;

double lambda_log_term(double lam) {
  return (lam > 0.0) ? 0.5 * lam * (1.0 + std::log(2.0 / lam)) : 0.0;
}

}  // namespace

namespace {

// Product form of the level condition, algebraically identical to
// cos(S_R-S_L) + sqrt(1+e^{-pi lam}) cos(chi + ... + S_R + S_L) but free of
// the cancellation that makes deep near-degenerate doublets graze zero below
// machine precision: with Theta_i = Phi_i + chi/2 and A = sqrt(1+e^{-pi lam}),
//   residual = (1+A) cos(T1) cos(T2) + (1-A) sin(T1) sin(T2),
//   (1-A) = -e^{-pi lam} / (1+A).
struct LevelCondition {
  const ActionBasis& basis;

  double theta1(double eps) const {
    return basis.phase_left(eps) + 0.5 * chi_phase(basis.lambda(eps)).chi;
  }
  double theta2(double eps) const {
    return basis.phase_right(eps) + 0.5 * chi_phase(basis.lambda(eps)).chi;
  }
  double operator()(double eps) const {
    const double lam = basis.lambda(eps);
    const double em = std::exp(-std::numbers::pi * lam);
    const double a = std::sqrt(1.0 + em);
    const double t1 = theta1(eps);
    const double t2 = theta2(eps);
    return (1.0 + a) * std::cos(t1) * std::cos(t2) -
           em / (1.0 + a) * std::sin(t1) * std::sin(t2);
  }
};

// Root hugging an isolated phase resonance: expand a bracket around eps_c
// until the residual changes sign (the root sits within ~e^{-pi lam}/beta).
bool polish_near_resonance(const LevelCondition& f, double eps_c, double eps_lo,
                           double eps_hi, double* root) {
  const double fc = f(eps_c);
  if (fc == 0.0) { *root = eps_c; return true; }
  double w = std::max(1e-15, 4.0 * std::abs(eps_c) * 1e-16);
  for (; w < eps_hi - eps_lo; w *= 4.0) {
    const double a = std::max(eps_c - w, eps_lo);
    const double b = std::min(eps_c + w, eps_hi);
    const double fa = f(a), fb = f(b);
    if ((fa < 0.0) != (fc < 0.0)) { *root = num::brent_root(f, a, eps_c, kRootTol); return true; }
    if ((fb < 0.0) != (fc < 0.0)) { *root = num::brent_root(f, eps_c, b, kRootTol); return true; }
    if (a == eps_lo && b == eps_hi) break;
  }
  return false;
}

}  // namespace

std::vector<double> scan_level_roots(const ActionBasis& basis, double eps_lo,
                                     double eps_hi, int grid_points) {
  std::vector<double> roots;
  if (!(eps_hi > eps_lo) || grid_points < 2) return roots;
  const LevelCondition f{basis};

  // Grid pass over the residual and both phases. The phases are monotone in
  // eps, so every resonance (cos Theta_i = 0) is caught even when the
  // residual only grazes zero there.
  const int n = grid_points;
  std::vector<double> e(n + 1), r(n + 1), c1(n + 1), c2(n + 1);
  for (int i = 0; i <= n; ++i) {
    e[i] = eps_lo + (eps_hi - eps_lo) * i / n;
    const double t1 = f.theta1(e[i]);
    const double t2 = f.theta2(e[i]);
    c1[i] = std::cos(t1);
    c2[i] = std::cos(t2);
    r[i] = f(e[i]);
  }

  auto push = [&](double x) {
    if (!roots.empty() && std::abs(x - roots.back()) < 4.0 * kRootTol) return;
    roots.push_back(x);
  };

  for (int i = 0; i < n; ++i) {
    const bool res1 = (c1[i] < 0.0) != (c1[i + 1] < 0.0);
    const bool res2 = (c2[i] < 0.0) != (c2[i + 1] < 0.0);
    const bool flip = (r[i] < 0.0) != (r[i + 1] < 0.0);
    if (!res1 && !res2) {
      // No resonance inside: a root would force |cos T1 cos T2| to be
      // exponentially small, impossible here, so a sign flip is transversal.
      if (flip) push(num::brent_root(f, e[i], e[i + 1], kRootTol));
      continue;
    }
    const auto resonance = [&](const std::vector<double>& c) {
      return num::brent_root([&](double x) {
        return (&c == &c1) ? std::cos(f.theta1(x)) : std::cos(f.theta2(x));
      }, e[i], e[i + 1], kRootTol);
    };
    if (res1 && res2) {
      // Both phases resonate in this cell: an anticrossing pair. The two
      // roots straddle the midpoint of the two resonances.
      const double ra = resonance(c1);
      const double rb = resonance(c2);
      const double mid = 0.5 * (ra + rb);
      double root;
      if (polish_near_resonance(f, mid, e[i], mid, &root)) push(root);
      if (polish_near_resonance(f, mid, mid, e[i + 1], &root)) push(root);
      continue;
    }
    const double rc = resonance(res1 ? c1 : c2);
    double root;
    if (polish_near_resonance(f, rc, e[i], e[i + 1], &root)) push(root);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

NearTopLevel dress_level(const Device& d, const ActionBasis& basis, double eps) {
  NearTopLevel lv;
  lv.eps = eps;
  lv.lambda = basis.lambda(eps);
  const double s_l = basis.action_left(eps);
  const double s_r = basis.action_right(eps);
  const double theta_sum =
      chi_phase(lv.lambda).chi + lambda_log_term(lv.lambda) + s_l + s_r;
  lv.B = std::exp(0.5 * std::numbers::pi * lv.lambda) *
         (std::sqrt(1.0 + std::exp(-std::numbers::pi * lv.lambda)) * std::sin(theta_sum) -
          std::sin(s_l - s_r));
  const double i_left = well_inv_sqrt_integral(d, eps, true);
  const double i_right = well_inv_sqrt_integral(d, eps, false);
  lv.g_left = std::sqrt(i_left / (2.0 * d.scales.eta));
  lv.g_right = std::sqrt(i_right / (2.0 * d.scales.eta));
  lv.G = std::sqrt(lv.g_left * lv.g_left + lv.B * lv.B * lv.g_right * lv.g_right);
  return lv;
}

}  // namespace

NearTopPair near_top_levels(const Device& d, const ActionBasis& basis,
                            double eps_lo, double eps_hi) {
  const double floor = std::max(d.geom.u_min_left, d.geom.u_min_right) + kWellFloorPad;
  eps_lo = std::max(eps_lo, floor);
  eps_hi = std::min(eps_hi, d.geom.u_top);
  const auto roots = scan_level_roots(basis, eps_lo, eps_hi);
  if (roots.size() < 2)
    throw not_enough_levels_error(
        "near_top_levels: fewer than two level roots in the window; widen it");
  NearTopPair pair;
  pair.f1 = dress_level(d, basis, roots[roots.size() - 1]);
  pair.f2 = dress_level(d, basis, roots[roots.size() - 2]);
  return pair;
}

WellLevels well_levels(const Device& d, double eps_ceiling) {
  WellLevels w;
  w.eps_0 = d.geom.u_min_left + std::sqrt(d.geom.u1_min_left) / d.scales.eta;

  for (int side = 0; side < 2; ++side) {
    const bool left = side == 0;
    const double floor = (left ? d.geom.u_min_left : d.geom.u_min_right) + kWellFloorPad;
    if (!(eps_ceiling > floor))
      throw empty_well_error(left ? "left well: ceiling below the well bottom"
                                  : "right well: ceiling below the well bottom");
    const double s_ceiling = raw_well_action(d, eps_ceiling, left);
    const int count = static_cast<int>(std::floor(s_ceiling / std::numbers::pi + 0.5));
    if (count < 1)
      throw empty_well_error(left ? "left well holds no level below the ceiling"
                                  : "right well holds no level below the ceiling");
    const double target = std::numbers::pi * (count - 0.5);
    auto f = [&](double eps) { return raw_well_action(d, eps, left) - target; };
    const double eps_level = num::brent_root(f, floor, eps_ceiling, kRootTol);
    if (left) {
      w.eps_L = eps_level;
      w.n_left = count;
    } else {
      w.eps_R = eps_level;
      w.n_right = count;
    }
  }
  return w;
}

PhaseSlopes phase_slopes(const Device& d, const ActionBasis& basis, double eps) {
  const double eta = d.scales.eta;
  const double u1 = d.geom.u1;
  const double sqrt_u1 = std::sqrt(u1);
  const double du = basis.u_top - eps;
  const double lam = basis.lambda(eps);
  const double chi_d = chi_phase(lam).dchi_dlambda;

  // d(lambda)/d(phi_x) geometric factor
  const double bs = d.params.beta_L * std::sin(d.geom.phi_top);
  const double bc = d.params.beta_L * std::cos(d.geom.phi_top);
  const double dphi = d.geom.phi_top - d.params.phi_x;
  const double dgeom = (bs * (1.0 - du / (4.0 * u1)) - dphi) / (bc - 1.0) - dphi;

  // ln(8 (eta^2 u1 / 2)^(1/4) W / 2^(1/4))
  const double q = std::pow(eta * eta * u1 / 2.0, 0.25);
  const double log_left = std::log(8.0 * q * basis.width_left / std::pow(2.0, 0.25));
  const double log_right = std::log(8.0 * q * basis.width_right / std::pow(2.0, 0.25));

  boost::math::quadrature::tanh_sinh<double> quad;
  auto dipole_integral = [&](bool left_well) {
    const WellInterval w = well_turning_points(eps, d.geom, d.params, left_well);
    return quad.integrate(
        [&](double phi) {
          const double v = eps - u_pot(d.params, phi);
          return v > 0.0 ? (phi - d.params.phi_x) / std::sqrt(v) : 0.0;
        },
        w.lo, w.hi, 1e-11);
  };

  const double lam_coeff = (0.5 * chi_d + 0.25 * std::log(2.0 / lam)) * eta / sqrt_u1;
  PhaseSlopes ps;
  ps.alpha1 = 0.5 * eta * dipole_integral(true) + lam_coeff * dgeom;
  ps.alpha2 = 0.5 * eta * dipole_integral(false) + lam_coeff * dgeom;
  ps.beta1 = 0.5 * eta * basis.reg_left + 0.5 * eta / sqrt_u1 * (log_left - chi_d);
  ps.beta2 = 0.5 * eta * basis.reg_right + 0.5 * eta / sqrt_u1 * (log_right - chi_d);
  return ps;
}

namespace {

struct PhasePoint {
  Device dev;
  ActionBasis basis;
};

PhasePoint make_point(DeviceParams p, double phi_x) {
  p.phi_x = phi_x;
  PhasePoint pt{Device::make(p), {}};
  pt.basis = make_action_basis(pt.dev);
  return pt;
}

double phase1(const PhasePoint& pt, double eps) {
  return pt.basis.phase_left(eps) + 0.5 * chi_phase(pt.basis.lambda(eps)).chi;
}
double phase2(const PhasePoint& pt, double eps) {
  return pt.basis.phase_right(eps) + 0.5 * chi_phase(pt.basis.lambda(eps)).chi;
}

// Energy at which Phi_1 + chi/2 hits its quantized value; the phase is
// monotone in eps (beta_1 > 0).
double inner_energy(const PhasePoint& pt, double target1) {
  const double floor =
      std::max(pt.dev.geom.u_min_left, pt.dev.geom.u_min_right) + kWellFloorPad;
  const double top = pt.dev.geom.u_top;
  auto f = [&](double eps) { return phase1(pt, eps) - target1; };
  if (f(floor) * f(top) > 0.0)
    throw no_crossing_error("left-well phase branch left the energy window");
  return num::brent_root(f, floor, top, kRootTol);
}

}  // namespace

CrossingPoint crossing_point(const DeviceParams& base, double seed_phi_x,
                             double search_halfwidth) {
  const PhasePoint seed = make_point(base, seed_phi_x);

  // Branch indices from the near-top pair at the seed bias.
  const double floor =
      std::max(seed.dev.geom.u_min_left, seed.dev.geom.u_min_right) + kWellFloorPad;
  const auto pair = near_top_levels(seed.dev, seed.basis, floor, seed.dev.geom.u_top);
  const double eps_mid = 0.5 * (pair.f1.eps + pair.f2.eps);
  const double half_pi = 0.5 * std::numbers::pi;
  const int k1 = static_cast<int>(std::lround((phase1(seed, eps_mid) - half_pi) / std::numbers::pi));
  const int k2 = static_cast<int>(std::lround((phase2(seed, eps_mid) - half_pi) / std::numbers::pi));
  const double target1 = half_pi + std::numbers::pi * k1;
  const double target2 = half_pi + std::numbers::pi * k2;

  auto mismatch = [&](double phi_x) {
    const PhasePoint pt = make_point(base, phi_x);
    return phase2(pt, inner_energy(pt, target1)) - target2;
  };

  // Bracket the root of the second phase condition nearest to the seed.
  // Samples where the k1 branch has left the window (too shallow a well, or
  // bistability lost) are skipped.
  const int coarse = 48;
  double best_lo = 0.0, best_hi = 0.0;
  bool found = false;
  bool have_prev = false;
  double prev_x = 0.0, prev_v = 0.0;
  for (int i = 0; i <= coarse; ++i) {
    const double x = seed_phi_x - search_halfwidth + 2.0 * search_halfwidth * i / coarse;
    double v;
    try {
      v = mismatch(x);
    } catch (const solver_error&) {
      have_prev = false;
      continue;
    }
    if (have_prev && (prev_v < 0.0) != (v < 0.0)) {
      if (!found || std::abs(0.5 * (prev_x + x) - seed_phi_x) <
                        std::abs(0.5 * (best_lo + best_hi) - seed_phi_x)) {
        best_lo = prev_x;
        best_hi = x;
        found = true;
      }
    }
    prev_x = x;
    prev_v = v;
    have_prev = true;
  }
  if (!found)
    throw no_crossing_error("no crossing of the two phase conditions in [" +
                            std::to_string(seed_phi_x - search_halfwidth) + ", " +
                            std::to_string(seed_phi_x + search_halfwidth) + "]");
  const double phi_x0 = num::brent_root(mismatch, best_lo, best_hi, 1e-13);

  const PhasePoint at = make_point(base, phi_x0);
  CrossingPoint c;
  c.phi_x0 = phi_x0;
  c.eps0 = inner_energy(at, target1);
  c.lambda0 = at.basis.lambda(c.eps0);
  c.k1 = k1;
  c.k2 = k2;
  const PhaseSlopes ps = phase_slopes(at.dev, at.basis, c.eps0);
  c.alpha1 = ps.alpha1;
  c.alpha2 = ps.alpha2;
  c.beta1 = ps.beta1;
  c.beta2 = ps.beta2;
  c.gap = std::sqrt(std::exp(-std::numbers::pi * c.lambda0) / (c.beta1 * c.beta2));
  c.homega_red = std::min(at.dev.hbar_omega_p_red(true), at.dev.hbar_omega_p_red(false));
  return c;
}

HyperbolaLevels hyperbola_spectrum(double delta_phi_x, const CrossingPoint& c) {
  const double b12 = c.beta1 * c.beta2;
  const double sum = c.alpha1 * c.beta2 + c.alpha2 * c.beta1;
  const double dif = c.alpha1 * c.beta2 - c.alpha2 * c.beta1;
  const double disc = dif * dif * delta_phi_x * delta_phi_x +
                      b12 * std::exp(-std::numbers::pi * c.lambda0);
  const double root = std::sqrt(disc);
  HyperbolaLevels h;
  h.dE_plus = -(sum * delta_phi_x - root) / (2.0 * b12);
  h.dE_minus = -(sum * delta_phi_x + root) / (2.0 * b12);
  const double bound = 0.5 * c.homega_red;
  h.extrapolation_warning =
      std::abs(h.dE_plus) > bound || std::abs(h.dE_minus) > bound;
  return h;
}

}  // namespace squid
