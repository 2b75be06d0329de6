#include "doctest.h"

#include <cmath>

#include "squid/specfun.hpp"

using namespace squid;

TEST_SUITE("specfun") {

TEST_CASE("chi(0) = 0 and the slope is psi(1/2)/2") {
  const auto c = chi_phase(0.0);
  CHECK(c.chi == 0.0);
  CHECK(psi_half() == doctest::Approx(-1.9635100260214235).epsilon(1e-12));
  CHECK(c.dchi_dlambda == doctest::Approx(0.5 * -1.9635100260214235).epsilon(1e-12));
}

TEST_CASE("chi is odd") {
  for (double lam : {0.3, 1.0, 2.0, 5.0, 17.0}) {
    const auto plus = chi_phase(lam);
    const auto minus = chi_phase(-lam);
    CHECK(minus.chi == doctest::Approx(-plus.chi).epsilon(1e-14));
    CHECK(minus.dchi_dlambda == doctest::Approx(plus.dchi_dlambda).epsilon(1e-14));
  }
}

TEST_CASE("chi agrees with the Lanczos gamma-phase oracle") {
  // 200 points over [-10, 10]; phases compared modulo 2 pi.
  double max_err = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double lam = -10.0 + 20.0 * i / 200.0;
    const double a = chi_phase(lam).chi;
    const double b = gamma_phase_oracle(lam);
    double diff = std::remainder(a - b, 2.0 * M_PI);
    max_err = std::max(max_err, std::abs(diff));
  }
  CHECK(max_err < 1e-9);
}

TEST_CASE("single-point cross checks") {
  CHECK(std::abs(chi_phase(1.0).chi - gamma_phase_oracle(1.0)) < 1e-10);
  CHECK(std::abs(chi_phase(5.0).chi - gamma_phase_oracle(5.0)) < 1e-10);
  CHECK(gamma_phase_oracle(0.0) == doctest::Approx(0.0));  // Gamma(1/2) real positive
}

TEST_CASE("gamma modulus identity") {
  for (double lam : {0.0, 0.5, 1.0, 3.0, 7.0, -3.0, 20.0, -20.0})
    CHECK(std::abs(gamma_modulus_residual(lam)) < 1e-12);
}

TEST_CASE("derivative matches central differences") {
  const double h = 1e-5;
  for (double lam : {0.2, 1.0, 2.5, 6.0, -4.0}) {
    const double fd = (chi_phase(lam + h).chi - chi_phase(lam - h).chi) / (2.0 * h);
    CHECK(std::abs(chi_phase(lam).dchi_dlambda - fd) < 1e-6);
  }
}

TEST_CASE("domain guard") {
  CHECK_THROWS(chi_phase(150.0));
  CHECK_THROWS(gamma_phase_oracle(120.0));
}

}  // TEST_SUITE
