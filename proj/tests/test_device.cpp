#include "doctest.h"

#include <cmath>
#include <random>

#include "squid/constants.hpp"
#include "squid/device.hpp"

using namespace squid;

namespace {

DeviceParams paper_device(double phi_x = 0.0) {
  DeviceParams p;
  p.beta_L = 1.75;
  p.L = 210e-12;
  p.C = 0.1e-12;
  p.R_eff = 8e6;
  p.T = 0.05;
  p.phi_x = phi_x;
  p.nu = 25.756e9;
  p.I_amp = 1e-12;
  return p;
}

}  // namespace

TEST_SUITE("device") {

TEST_CASE("derived scales match direct arithmetic") {
  // Frozen from (Phi0/2pi)^2/L, (hbar/2e)^2 C, beta_L Phi0/(2 pi L) with
  // SI-2019 constants.
  const auto s = derive_scales(paper_device());
  CHECK(s.U0 == doctest::Approx(5.157654527061215e-22).epsilon(1e-12));
  CHECK(s.M == doctest::Approx(1.083107450682855e-44).epsilon(1e-12));
  CHECK(s.Ic == doctest::Approx(2.742549820628777e-6).epsilon(1e-12));
  CHECK(s.eta == doctest::Approx(31.69572810741325).epsilon(1e-12));
}

TEST_CASE("invalid parameters are rejected by name") {
  auto p = paper_device();
  p.L = 0.0;
  CHECK_THROWS_AS(derive_scales(p), parameter_domain_error);
  p = paper_device();
  p.R_eff = -1.0;
  CHECK_THROWS_AS(derive_scales(p), parameter_domain_error);
  p = paper_device();
  p.T = -0.1;
  CHECK_THROWS_AS(derive_scales(p), parameter_domain_error);
}

TEST_CASE("potential and derivatives, parabola limit") {
  auto p = paper_device();
  p.beta_L = 0.0;
  p.phi_x = 0.3;
  // Pure parabola: vertex at phi = phi_x.
  CHECK(u_pot(p, 0.3) == doctest::Approx(0.0));
  CHECK(u_pot_d1(p, 0.3) == doctest::Approx(0.0));
  CHECK(u_pot_d2(p, 0.3) == doctest::Approx(1.0));
}

TEST_CASE("barrier top at the origin for the symmetric bias") {
  const auto p = paper_device(0.0);
  CHECK(u_pot_d1(p, 0.0) == 0.0);
  CHECK(u_pot_d2(p, 0.0) == doctest::Approx(1.0 - 1.75));  // negative: maximum
}

TEST_CASE("symmetric-case stationary structure") {
  const auto d = Device::make(paper_device(0.0));
  const auto& g = d.geom;
  CHECK(g.phi_top == 0.0);  // the phi_x = 0 seed is already stationary
  // phi = 1.75 sin(phi) root, frozen from bisection.
  CHECK(g.phi_min_right == doctest::Approx(1.728330093842190).epsilon(1e-10));
  CHECK(g.phi_min_right == doctest::Approx(-g.phi_min_left).epsilon(1e-12));
  CHECK(g.u_min_left == doctest::Approx(g.u_min_right).epsilon(1e-12));
  // Barrier height u_top - u_min = beta_L - (phi_m^2/2 + beta_L cos(phi_m)).
  CHECK(g.barrier_left() == doctest::Approx(0.5309827795585044).epsilon(1e-10));
  // Appendix identity for the top curvature parameter.
  CHECK(g.u1 == doctest::Approx(0.5 * (1.75 * std::cos(g.phi_top) - 1.0)).epsilon(1e-14));
  CHECK(g.u1 > 0.0);
  CHECK(g.u1_min_left > 0.0);
  CHECK(g.u1_min_right > 0.0);
}

TEST_CASE("plasma frequency for the symmetric wells") {
  const auto d = Device::make(paper_device(0.0));
  // sqrt(2 u1_min U0 / M) with u1_min = (1 - beta_L cos(phi_m))/2; ~39.2 GHz.
  CHECK(d.scales.Omega_p_left == doctest::Approx(d.scales.Omega_p_right).epsilon(1e-12));
  CHECK(d.scales.Omega_p_left / (2 * M_PI * 1e9) == doctest::Approx(39.20921173612922).epsilon(1e-9));
  CHECK(d.hbar_omega_p_red(true) == doctest::Approx(0.05037231286559802).epsilon(1e-9));
}

TEST_CASE("bistability is lost for beta_L < 1 and outside the flux window") {
  auto p = paper_device();
  p.beta_L = 0.5;
  const auto s = derive_scales(p);
  for (double phi_x : {0.0, 0.3, -1.0})  {
    p.phi_x = phi_x;
    CHECK_THROWS_AS(stationary_points(p, s), bistability_lost_error);
  }
  // Fold of the beta_L = 1.75 window is at |phi_x| ~ 0.47359.
  p = paper_device(0.48);
  CHECK_THROWS_AS(stationary_points(p, derive_scales(p)), bistability_lost_error);
  p = paper_device(0.46);
  CHECK_NOTHROW(stationary_points(p, derive_scales(p)));
}

TEST_CASE("stationary gradient residuals across the bistable window") {
  for (double phi_x : {-0.45, -0.3, -0.1, 0.0, 0.2, 0.35, 0.45}) {
    const auto d = Device::make(paper_device(phi_x));
    CHECK(std::abs(u_pot_d1(d.params, d.geom.phi_min_left)) < 1e-12);
    CHECK(std::abs(u_pot_d1(d.params, d.geom.phi_top)) < 1e-12);
    CHECK(std::abs(u_pot_d1(d.params, d.geom.phi_min_right)) < 1e-12);
    CHECK(d.geom.phi_min_left < d.geom.phi_top);
    CHECK(d.geom.phi_top < d.geom.phi_min_right);
  }
}

TEST_CASE("turning points: symmetric mirror pairs") {
  const auto d = Device::make(paper_device(0.0));
  const double eps = d.geom.u_top - 0.1;
  const auto t = turning_points(eps, d.geom, d.params);
  CHECK(t.phi1 == doctest::Approx(-t.phi4).epsilon(1e-10));
  CHECK(t.phi2 == doctest::Approx(-t.phi3).epsilon(1e-10));
  CHECK(t.phi1 < t.phi2);
  CHECK(t.phi2 < d.geom.phi_top);
  CHECK(t.phi3 < t.phi4);
}

TEST_CASE("turning points agree with a dense sign-scan oracle") {
  const auto d = Device::make(paper_device(0.0));
  const double eps = d.geom.u_top - 0.1;
  const auto t = turning_points(eps, d.geom, d.params);

  // Brute-force 1e5-point scan for sign changes of u - eps.
  const double lo = t.phi1 - 1.0, hi = t.phi4 + 1.0;
  const int n = 100000;
  std::vector<double> crossings;
  double prev = u_pot(d.params, lo) - eps;
  for (int i = 1; i <= n; ++i) {
    const double phi = lo + (hi - lo) * i / n;
    const double cur = u_pot(d.params, phi) - eps;
    if ((prev < 0.0) != (cur < 0.0))
      crossings.push_back(phi - (hi - lo) / n * cur / (cur - prev));
    prev = cur;
  }
  REQUIRE(crossings.size() == 4);
  const double grid_tol = 2.0 * (hi - lo) / n;
  CHECK(std::abs(crossings[0] - t.phi1) < grid_tol);
  CHECK(std::abs(crossings[1] - t.phi2) < grid_tol);
  CHECK(std::abs(crossings[2] - t.phi3) < grid_tol);
  CHECK(std::abs(crossings[3] - t.phi4) < grid_tol);
}

TEST_CASE("turning point residuals over random energies and biases") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> bias(-0.4, 0.4);
  std::uniform_real_distribution<double> frac(0.02, 0.98);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const auto d = Device::make(paper_device(bias(rng)));
    const double floor = std::max(d.geom.u_min_left, d.geom.u_min_right);
    const double eps = floor + frac(rng) * (d.geom.u_top - floor);
    const auto t = turning_points(eps, d.geom, d.params);
    for (double phi : {t.phi1, t.phi2, t.phi3, t.phi4})
      CHECK(std::abs(u_pot(d.params, phi) - eps) < 1e-10);
    CHECK(t.phi1 < t.phi2);
    CHECK(t.phi2 <= d.geom.phi_top);
    CHECK(d.geom.phi_top <= t.phi3);
    CHECK(t.phi3 < t.phi4);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("turning points: domain errors") {
  const auto d = Device::make(paper_device(0.0));
  CHECK_THROWS_AS(turning_points(d.geom.u_top + 0.1, d.geom, d.params), energy_domain_error);
  CHECK_THROWS_AS(turning_points(d.geom.u_min_left - 0.2, d.geom, d.params), energy_domain_error);
  CHECK_THROWS_AS(turning_points(d.geom.u_top - 1e-12, d.geom, d.params),
                  degenerate_turning_point_error);
}

TEST_CASE("well interval collapses toward the well bottom") {
  const auto d = Device::make(paper_device(0.0));
  const double eps = d.geom.u_min_left + 1e-8;
  const auto w = well_turning_points(eps, d.geom, d.params, true);
  CHECK(std::abs(w.lo - d.geom.phi_min_left) < 1e-3);
  CHECK(std::abs(w.hi - d.geom.phi_min_left) < 1e-3);
  CHECK(w.lo < d.geom.phi_min_left);
  CHECK(w.hi > d.geom.phi_min_left);
}

}  // TEST_SUITE
