#pragma once

#include <complex>

#include "squid/device.hpp"
#include "squid/matrix_elements.hpp"
#include "squid/spectrum.hpp"

namespace squid {

// Bath-induced transition rates and the resulting level widths (all 1/s).
// w_f2f1 is the f1 -> f2 rate, w00_* the coherence-coupling rates; gamma_i is
// half the total outgoing rate of level f_i.
struct RateSet {
  double w_f1f2 = 0.0;
  double w_f2f1 = 0.0;
  double w00_f1f2 = 0.0;
  double w00_f2f1 = 0.0;
  double w_Lf1 = 0.0, w_Lf2 = 0.0;
  double w_Rf1 = 0.0, w_Rf2 = 0.0;
  double gamma1 = 0.0, gamma2 = 0.0;
};

// General near-resonant rate: dE_mj = E_m - E_j and dE_nf = E_n - E_f select
// the transition pair (J), bracket is the symmetrized matrix-element product.
// Throws resonance_mismatch_error when |dE_mj - dE_nf| exceeds half of
// hbar*omega_p_ref. The result is clamped at >= 0.
double generic_rate(double dE_mj, double dE_nf, double T, double R_eff,
                    double hbar_omega_p_ref, double bracket);

RateSet build_rates(const WellLevels& levels, const NearTopPair& pair,
                    const MatrixElementSet& me, const DeviceParams& p,
                    const DerivedScales& s);

// Rotating-wave coefficients of the off-diagonal density-matrix elements.
struct OffdiagAmplitudes {
  std::complex<double> A_f1, A_f2, B_f1c, B_f2c;
};
OffdiagAmplitudes offdiag_amplitudes(const WellLevels& levels,
                                     const NearTopPair& pair,
                                     const MatrixElementSet& me,
                                     const RateSet& rates,
                                     const DeviceParams& p,
                                     const DerivedScales& s);

// Steady-state populations of the delocalized pair and the oscillating
// coefficients of their time dependence.
struct SteadyState {
  double rho_f1 = 0.0;
  double rho_f2 = 0.0;
  std::complex<double> F1, D1;
  std::complex<double> A_f1, A_f2, B_f1c, B_f2c;
  bool perturbative_warning = false;  // populations beyond the weak-drive premise
  bool oscillation_warning = false;   // rho(t) can dip negative: rho < 2|F1| or 2|D1|
};

SteadyState steady_state(const WellLevels& levels, const NearTopPair& pair,
                         const MatrixElementSet& me, const RateSet& rates,
                         const DeviceParams& p, const DerivedScales& s);

// Time-averaged interwell escape rate and the amplitude of its fast
// oscillating part.
struct EscapeResult {
  double W = 0.0;
  double w_Rf1_term = 0.0;
  double w_Rf2_term = 0.0;
  double oscillation_amplitude = 0.0;
};

EscapeResult escape_rate(const SteadyState& st, const RateSet& rates);

}  // namespace squid
