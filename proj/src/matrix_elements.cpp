#include "squid/matrix_elements.hpp"

#include <cmath>
#include <numbers>

#include "squid/actions.hpp"
#include "squid/constants.hpp"
#include "squid/trajectory.hpp"

namespace squid {

namespace {

// hbar/(2M) * int_0^{T/2} dt zeta(phi(t)) cos(2 pi ell t / T); the common
// numerator of the quasiclassical elements (still missing the 1/(G_a G_b)
// normalizations and, for right-well pieces, the B amplitude).
std::complex<double> time_integral(double eps_mid, bool left_well,
                                   const Device& d, const ZetaFn& zeta, int ell) {
  const Trajectory traj = classical_trajectory(eps_mid, left_well, d);
  const double omega_ell = 2.0 * std::numbers::pi * ell / traj.period;
  std::complex<double> acc = 0.0;
  for (size_t j = 0; j < traj.t.size(); ++j)
    acc += traj.weight[j] * zeta(traj.phi[j]) * std::cos(omega_ell * traj.t[j]);
  return consts::hbar / (2.0 * d.scales.M) * acc;
}

}  // namespace

double well_norm_factor(double eps, bool left_well, const Device& d) {
  return std::sqrt(well_inv_sqrt_integral(d, eps, left_well) / (2.0 * d.scales.eta));
}

std::complex<double> well_matrix_element(double eps_a, double eps_b,
                                         bool left_well, const Device& d,
                                         const ZetaFn& zeta, int ell) {
  if (ell < 0) throw energy_domain_error("well_matrix_element: ell must be >= 0");
  const double eps_mid = 0.5 * (eps_a + eps_b);
  const double g_a = well_norm_factor(eps_a, left_well, d);
  const double g_b = well_norm_factor(eps_b, left_well, d);
  return time_integral(eps_mid, left_well, d, zeta, ell) / (g_a * g_b);
}

std::complex<double> delocalized_matrix_element(const NearTopPair& pair,
                                                const Device& d,
                                                const ZetaFn& zeta) {
  const double eps_mid = 0.5 * (pair.f1.eps + pair.f2.eps);
  const Trajectory left = classical_trajectory(eps_mid, true, d);
  const Trajectory right = classical_trajectory(eps_mid, false, d);
  std::complex<double> j_left = 0.0, j_right = 0.0;
  for (size_t j = 0; j < left.t.size(); ++j)
    j_left += left.weight[j] * zeta(left.phi[j]);
  for (size_t j = 0; j < right.t.size(); ++j)
    j_right += right.weight[j] * zeta(right.phi[j]);
  const double t1 = left.period, t2 = right.period;
  const double frac1 = t2 / (t1 + t2), frac2 = t1 / (t1 + t2);
  const double ortho = 1.0 - pair.f1.B * pair.f2.B;
  return consts::hbar * ortho / (2.0 * d.scales.M * pair.f1.G * pair.f2.G) *
         (frac1 * j_left - frac2 * j_right);
}

MatrixElementSet build_element_set(const WellLevels& levels,
                                   const NearTopPair& pair, const Device& d) {
  MatrixElementSet set;
  const ZetaFn phi_op = [](double phi) { return std::complex<double>(phi, 0.0); };
  const ZetaFn exp_op = [](double phi) {
    return std::exp(std::complex<double>(0.0, 0.5 * phi));
  };

  const double g_0 = well_norm_factor(levels.eps_0, true, d);
  const double g_L = well_norm_factor(levels.eps_L, true, d);
  const double g_R = well_norm_factor(levels.eps_R, false, d);

  // drive elements: ground state to the pair, ell = left-well level count
  const int ell_0f = levels.n_left;
  set.me_0_f1 = (time_integral(0.5 * (levels.eps_0 + pair.f1.eps), true, d, phi_op, ell_0f) /
                 (g_0 * pair.f1.G)).real();
  set.me_0_f2 = (time_integral(0.5 * (levels.eps_0 + pair.f2.eps), true, d, phi_op, ell_0f) /
                 (g_0 * pair.f2.G)).real();

  // decay elements: adjacent localized level in each well, ell = 1
  set.me_exp_Lf1 = time_integral(0.5 * (levels.eps_L + pair.f1.eps), true, d, exp_op, 1) /
                   (g_L * pair.f1.G);
  set.me_exp_Lf2 = time_integral(0.5 * (levels.eps_L + pair.f2.eps), true, d, exp_op, 1) /
                   (g_L * pair.f2.G);
  set.me_exp_Rf1 = pair.f1.B *
                   time_integral(0.5 * (levels.eps_R + pair.f1.eps), false, d, exp_op, 1) /
                   (g_R * pair.f1.G);
  set.me_exp_Rf2 = pair.f2.B *
                   time_integral(0.5 * (levels.eps_R + pair.f2.eps), false, d, exp_op, 1) /
                   (g_R * pair.f2.G);

  set.me_exp_f1f2 = delocalized_matrix_element(pair, d, exp_op);
  set.me_00_exp = time_integral(levels.eps_0, true, d, exp_op, 0) / (g_0 * g_0);
  return set;
}

}  // namespace squid
