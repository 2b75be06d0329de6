#pragma once

#include <complex>

namespace squid {

// Barrier-top connection phase chi(lambda) = arg Gamma((1+i*lambda)/2),
// evaluated from its real series together with d(chi)/d(lambda).
// chi is odd and continuous with chi(0) = 0.
struct ChiValue {
  double lambda = 0.0;
  double chi = 0.0;
  double dchi_dlambda = 0.0;
};

// Valid for |lambda| < 100.
ChiValue chi_phase(double lambda);

// psi(1/2) = -euler_gamma - 2 ln 2; the slope of chi at lambda = 0 is psi(1/2)/2.
double psi_half();

// Independent cross-check: complex Lanczos evaluation of log Gamma((1+i*lambda)/2).
// Phase is the continuous branch (zero at lambda = 0).
std::complex<double> lgamma_half_line(double lambda);

// arg Gamma((1+i*lambda)/2) from the Lanczos route (test oracle).
double gamma_phase_oracle(double lambda);

// Relative residual of |Gamma((1+i*lambda)/2)| = sqrt(2*pi) e^{-pi lambda/4} /
// sqrt(1+e^{-pi lambda}); ~1e-14 when the evaluation is healthy.
double gamma_modulus_residual(double lambda);

}  // namespace squid
