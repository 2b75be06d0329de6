#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

// Small 1D root-finding / minimization kit shared by the solver modules.
namespace squid::num {

// Brent's method on [a, b]; requires a sign change. Converges to ~machine
// precision in the abscissa unless a looser xtol is given.
template <class F>
double brent_root(F&& f, double a, double b, double xtol = 0.0,
                  int max_iter = 200) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw std::invalid_argument("brent_root: no sign change in bracket");
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = m; e = m;  // bisection
    } else {
      double p, q;
      const double s = fb / fa;
      if (a == c) {  // secant
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {  // inverse quadratic
        const double qa = fa / fc, r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d; d = p / q;
      } else {
        d = m; e = m;
      }
    }
    a = b; fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) { c = a; fc = fa; d = b - a; e = d; }
  }
  return b;
}

// Damped Newton from a seed, iterates clamped to [lo, hi]; a step is halved
// until the residual decreases. f returns (value, derivative).
template <class F>
double safeguarded_newton(F&& f, double x0, double lo, double hi,
                          double ftol, int max_iter = 100) {
  double x = std::min(std::max(x0, lo), hi);
  auto [v, dv] = f(x);
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(v) < ftol) return x;
    double step = (dv != 0.0) ? -v / dv : (hi - lo) * 1e-3;
    for (int halve = 0; halve < 60; ++halve) {
      double xn = std::min(std::max(x + step, lo), hi);
      auto [vn, dvn] = f(xn);
      if (std::abs(vn) < std::abs(v) || xn == x) {
        x = xn; v = vn; dv = dvn;
        break;
      }
      step *= 0.5;
    }
  }
  if (std::abs(v) >= ftol)
    throw std::runtime_error("safeguarded_newton: no convergence");
  return x;
}

// Golden-section minimization of a unimodal function over [a, b].
template <class F>
double golden_min(F&& f, double a, double b, double xtol, int max_iter = 200) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace squid::num
