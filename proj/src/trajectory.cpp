#include "squid/trajectory.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "squid/actions.hpp"
#include "squid/constants.hpp"

namespace squid {

namespace {

// dt = t_factor * dphi / sqrt(eps - u), t_factor = hbar eta / (2 U0).
double time_factor(const Device& d) {
  return consts::hbar * d.scales.eta / (2.0 * d.scales.U0);
}

// Time density in the substituted variable, phi = turn + dir*s^2:
// dt/ds = 2 t_factor s / sqrt(eps - u(phi)), finite at the turning point.
struct ArcKernel {
  const Device& d;
  double eps, turn, dir, tf, slope_at_turn;

  ArcKernel(const Device& dev, double eps_, double turn_, double dir_)
      : d(dev), eps(eps_), turn(turn_), dir(dir_), tf(time_factor(dev)),
        slope_at_turn(std::abs(u_pot_d1(dev.params, turn_))) {}

  double operator()(double s) const {
    const double phi = turn + dir * s * s;
    const double v = eps - u_pot(d.params, phi);
    if (s == 0.0 || v <= 0.0) return 2.0 * tf / std::sqrt(slope_at_turn);
    return 2.0 * tf * s / std::sqrt(v);
  }
};

// One arc from a turning point to the well bottom: uniform s grid with
// Gauss-Legendre cumulative times and Simpson integration weights.
struct HalfArc {
  std::vector<double> phi, t_from_turn, weight;
  double duration = 0.0;

  HalfArc(const Device& d, double eps, double turn, double bottom, int n_intervals) {
    const double dir = bottom > turn ? 1.0 : -1.0;
    const double smax = std::sqrt(std::abs(bottom - turn));
    const int n = (n_intervals % 2 == 0) ? n_intervals : n_intervals + 1;
    const double ds = smax / n;
    const ArcKernel g(d, eps, turn, dir);

    phi.resize(n + 1);
    t_from_turn.resize(n + 1);
    weight.resize(n + 1);
    constexpr double r = 0.7745966692414834;  // sqrt(3/5)
    double acc = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double s = j * ds;
      phi[j] = turn + dir * s * s;
      if (j > 0) {
        const double m = (j - 0.5) * ds;
        acc += ds / 18.0 *
               (5.0 * g(m - 0.5 * ds * r) + 8.0 * g(m) + 5.0 * g(m + 0.5 * ds * r));
      }
      t_from_turn[j] = acc;
      const double c = (j == 0 || j == n) ? 1.0 : (j % 2 ? 4.0 : 2.0);
      weight[j] = c * ds / 3.0 * g(s);
    }
    duration = acc;
  }
};

}  // namespace

Trajectory classical_trajectory(double eps, bool left_well, const Device& d,
                                int n_samples) {
  const WellInterval w = well_turning_points(eps, d.geom, d.params, left_well);
  const double phi_bottom = left_well ? d.geom.phi_min_left : d.geom.phi_min_right;
  const int n_half = std::max(16, (n_samples - 1) / 2);

  const HalfArc lower(d, eps, w.lo, phi_bottom, n_half);
  const HalfArc upper(d, eps, w.hi, phi_bottom, n_half);
  const double t_half = lower.duration + upper.duration;

  Trajectory traj;
  traj.eps = eps;
  traj.left_well = left_well;
  traj.period = 2.0 * t_half;

  const int n_lo = static_cast<int>(lower.phi.size());
  const int n_up = static_cast<int>(upper.phi.size());
  traj.t.reserve(n_lo + n_up - 1);
  traj.phi.reserve(n_lo + n_up - 1);
  traj.weight.reserve(n_lo + n_up - 1);
  for (int j = 0; j < n_lo; ++j) {
    traj.t.push_back(lower.t_from_turn[j]);
    traj.phi.push_back(lower.phi[j]);
    traj.weight.push_back(lower.weight[j]);
  }
  // the meeting sample at the bottom is shared; merge its weight
  traj.weight.back() += upper.weight[n_up - 1];
  for (int j = n_up - 2; j >= 0; --j) {
    traj.t.push_back(t_half - upper.t_from_turn[j]);
    traj.phi.push_back(upper.phi[j]);
    traj.weight.push_back(upper.weight[j]);
  }
  return traj;
}

double period_by_quadrature(double eps, bool left_well, const Device& d) {
  const WellInterval w = well_turning_points(eps, d.geom, d.params, left_well);
  boost::math::quadrature::tanh_sinh<double> quad;
  const auto f = [&](double phi) {
    const double v = eps - u_pot(d.params, phi);
    return v > 0.0 ? 1.0 / std::sqrt(v) : 0.0;
  };
  return 2.0 * time_factor(d) * quad.integrate(f, w.lo, w.hi, 1e-11);
}

}  // namespace squid
