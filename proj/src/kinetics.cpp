#include "squid/kinetics.hpp"

#include <cmath>
#include <numbers>

#include "squid/constants.hpp"

namespace squid {

namespace {

using std::complex;
using namespace consts;

// x coth(x), stable through x = 0.
double x_coth_x(double x) {
  if (std::abs(x) < 1e-8) return 1.0 + x * x / 3.0;
  return x / std::tanh(x);
}

}  // namespace

double generic_rate(double dE_mj, double dE_nf, double T, double R_eff,
                    double hbar_omega_p_ref, double bracket) {
  if (std::abs(dE_mj - dE_nf) > 0.5 * hbar_omega_p_ref)
    throw resonance_mismatch_error(
        "generic_rate: transition pair violates the near-resonance condition");
  const double e2 = e_charge * e_charge;
  const double hw = 0.5 * (dE_mj + dE_nf);  // hbar * omega-tilde
  double thermal, density;
  if (T > 0.0) {
    const double x = hw / (2.0 * k_B * T);
    thermal = 1.0 + std::tanh(x);
    density = (2.0 * k_B * T / std::numbers::pi) * x_coth_x(x);
  } else {
    thermal = hw > 0.0 ? 2.0 : (hw < 0.0 ? 0.0 : 1.0);
    density = std::abs(hw) / std::numbers::pi;
  }
  const double rate = std::numbers::pi / (2.0 * R_eff * e2 * hbar) * thermal *
                      density * bracket;
  return rate > 0.0 ? rate : 0.0;
}

RateSet build_rates(const WellLevels& levels, const NearTopPair& pair,
                    const MatrixElementSet& me, const DeviceParams& p,
                    const DerivedScales& s) {
  RateSet r;
  const double U0 = s.U0;
  const double E_f1 = pair.f1.eps * U0;
  const double E_f2 = pair.f2.eps * U0;
  const double E_L = levels.eps_L * U0;
  const double E_R = levels.eps_R * U0;
  const double e2 = e_charge * e_charge;
  const double hw_ref = std::min(hbar * s.Omega_p_left, hbar * s.Omega_p_right);

  const double me2_f1f2 = std::norm(me.me_exp_f1f2);
  // interwell pair rates, full thermal forms (the splitting is ~ k_B T)
  r.w_f2f1 = generic_rate(E_f1 - E_f2, E_f1 - E_f2, p.T, p.R_eff, hw_ref,
                          2.0 * me2_f1f2);
  r.w_f1f2 = generic_rate(E_f2 - E_f1, E_f2 - E_f1, p.T, p.R_eff, hw_ref,
                          2.0 * me2_f1f2);

  // coherence-coupling rates; bracket = <0|e^{i phi/2}|0><f1|e^{-i phi/2}|f2> + c.c.
  const double bracket00 =
      2.0 * std::real(me.me_00_exp * std::conj(me.me_exp_f1f2));
  r.w00_f1f2 = generic_rate(0.0, E_f2 - E_f1, p.T, p.R_eff, hw_ref, bracket00);
  // detailed balance as printed: exp(-(E_f2 - E_f1)/(2 k_B T)) enhances the
  // downward partner
  if (p.T > 0.0) {
    r.w00_f2f1 = std::exp(-(E_f2 - E_f1) / (2.0 * k_B * p.T)) * r.w00_f1f2;
  } else {
    r.w00_f2f1 = generic_rate(0.0, E_f1 - E_f2, p.T, p.R_eff, hw_ref, bracket00);
  }

  // decay into the localized levels, zero-temperature closed forms
  r.w_Lf1 = 2.0 * (E_f1 - E_L) / (p.R_eff * e2 * hbar) * std::norm(me.me_exp_Lf1) * hbar;
  r.w_Lf2 = 2.0 * (E_f2 - E_L) / (p.R_eff * e2 * hbar) * std::norm(me.me_exp_Lf2) * hbar;
  r.w_Rf1 = 2.0 * (E_f1 - E_R) / (p.R_eff * e2 * hbar) * std::norm(me.me_exp_Rf1) * hbar;
  r.w_Rf2 = 2.0 * (E_f2 - E_R) / (p.R_eff * e2 * hbar) * std::norm(me.me_exp_Rf2) * hbar;

  r.gamma1 = 0.5 * (r.w_f2f1 + r.w_Lf1 + r.w_Rf1);
  r.gamma2 = 0.5 * (r.w_f1f2 + r.w_Lf2 + r.w_Rf2);
  return r;
}

OffdiagAmplitudes offdiag_amplitudes(const WellLevels& levels,
                                     const NearTopPair& pair,
                                     const MatrixElementSet& me,
                                     const RateSet& rates,
                                     const DeviceParams& p,
                                     const DerivedScales& s) {
  const double omega = 2.0 * std::numbers::pi * p.nu;
  const double w10 = (pair.f1.eps - levels.eps_0) * s.U0 / hbar;
  const double w20 = (pair.f2.eps - levels.eps_0) * s.U0 / hbar;
  const double drive = p.I_amp / (4.0 * e_charge);
  const double pp = rates.w00_f1f2 * rates.w00_f2f1;
  const complex<double> i(0.0, 1.0);

  OffdiagAmplitudes a;
  const complex<double> d1 = (omega - w10) - i * rates.gamma1;
  const complex<double> d1b = (omega - w10) - i * rates.gamma2;
  const complex<double> d2 = (omega - w20) - i * rates.gamma2;
  const complex<double> d2b = (omega - w20) - i * rates.gamma1;
  a.A_f1 = -drive * me.me_0_f1 / (d1 + pp / d1b);
  a.A_f2 = -drive * me.me_0_f2 / (d2 + pp / d2b);
  a.B_f1c = -i * rates.w00_f1f2 * a.A_f2 / d2b;
  a.B_f2c = -i * rates.w00_f2f1 * a.A_f1 / d1b;
  return a;
}

SteadyState steady_state(const WellLevels& levels, const NearTopPair& pair,
                         const MatrixElementSet& me, const RateSet& rates,
                         const DeviceParams& p, const DerivedScales& s) {
  const double omega = 2.0 * std::numbers::pi * p.nu;
  const double w10 = (pair.f1.eps - levels.eps_0) * s.U0 / hbar;
  const double w20 = (pair.f2.eps - levels.eps_0) * s.U0 / hbar;
  const double g1 = rates.gamma1, g2 = rates.gamma2;

  const double denom = g1 * g2 - 0.25 * rates.w_f2f1 * rates.w_f1f2;
  if (!(denom > 1e-30 * std::max(g1 * g2, 1e-300)))
    throw degenerate_kinetics_error("steady_state: kinetic determinant collapsed");

  const double amp2 = p.I_amp * p.I_amp / (16.0 * e_charge * e_charge);
  const double pp = rates.w00_f1f2 * rates.w00_f2f1;
  const double x1 = omega - w10;
  const double x2 = omega - w20;
  const double me01_2 = me.me_0_f1 * me.me_0_f1;
  const double me02_2 = me.me_0_f2 * me.me_0_f2;

  const double den1 = x1 * x1 + g1 * g1 +
                      (pp * pp + 2.0 * pp * (x1 * x1 - g1 * g2)) / (x1 * x1 + g2 * g2);
  const double den2 = x2 * x2 + g2 * g2 +
                      (pp * pp + 2.0 * pp * (x2 * x2 - g1 * g2)) / (x2 * x2 + g1 * g1);
  const double num1 = g1 - g2 * pp / (x1 * x1 + g2 * g2);
  const double num2 = g2 - g1 * pp / (x2 * x2 + g1 * g1);

  SteadyState st;
  st.rho_f1 = amp2 / denom *
              (g2 * me01_2 * num1 / den1 +
               0.5 * rates.w_f1f2 * me02_2 * num2 / den2);
  st.rho_f2 = amp2 / denom *
              (g1 * me02_2 * num2 / den2 +
               0.5 * rates.w_f2f1 * me01_2 * num1 / den1);

  // oscillating coefficients (beat at (E_f2 - E_f1)/hbar)
  const complex<double> i(0.0, 1.0);
  const double d21 = (pair.f2.eps - pair.f1.eps) * s.U0 / hbar;  // negative
  const complex<double> common =
      d21 * d21 - 4.0 * g1 * g2 - 2.0 * i * (g1 + g2) * d21 +
      rates.w_f1f2 * rates.w_f2f1;
  const complex<double> k_fac =
      i * amp2 * me.me_0_f1 * me.me_0_f2 / common;
  const complex<double> q2 =
      x2 * x2 - g1 * g2 + pp + i * (g1 + g2) * x2;
  const complex<double> q1 =
      x1 * x1 - g1 * g2 + pp - i * (g1 + g2) * x1;
  st.F1 = k_fac * ((d21 - 2.0 * i * g2) * rates.w00_f1f2 / q2 -
                   i * rates.w_f1f2 * rates.w00_f2f1 / q1);
  st.D1 = k_fac * ((d21 - 2.0 * i * g1) * rates.w00_f2f1 / q1 -
                   i * rates.w_f2f1 * rates.w00_f1f2 / q2);

  const OffdiagAmplitudes a = offdiag_amplitudes(levels, pair, me, rates, p, s);
  st.A_f1 = a.A_f1;
  st.A_f2 = a.A_f2;
  st.B_f1c = a.B_f1c;
  st.B_f2c = a.B_f2c;

  st.perturbative_warning = std::max(st.rho_f1, st.rho_f2) > 0.1;
  st.oscillation_warning =
      st.rho_f1 < 2.0 * std::abs(st.F1) || st.rho_f2 < 2.0 * std::abs(st.D1);
  return st;
}

EscapeResult escape_rate(const SteadyState& st, const RateSet& rates) {
  EscapeResult out;
  out.w_Rf1_term = rates.w_Rf1 * st.rho_f1;
  out.w_Rf2_term = rates.w_Rf2 * st.rho_f2;
  out.W = out.w_Rf1_term + out.w_Rf2_term;
  out.oscillation_amplitude =
      2.0 * std::abs(rates.w_Rf1 * st.F1 + rates.w_Rf2 * st.D1);
  return out;
}

}  // namespace squid
