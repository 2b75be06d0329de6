#pragma once

#include <complex>
#include <functional>

#include "squid/device.hpp"
#include "squid/spectrum.hpp"

namespace squid {

using ZetaFn = std::function<std::complex<double>(double)>;

// Quasiclassical transition elements entering the kinetics. The exp elements
// are <a|e^{i phi/2}|b>; me_0_* are the dimensionless <0|phi|f> drive
// elements.
struct MatrixElementSet {
  double me_0_f1 = 0.0;
  double me_0_f2 = 0.0;
  std::complex<double> me_exp_f1f2;
  std::complex<double> me_exp_Lf1, me_exp_Lf2;
  std::complex<double> me_exp_Rf1, me_exp_Rf2;
  std::complex<double> me_00_exp;
};

// <a|zeta|b> for two states quantized in the same well: trajectory at the
// midpoint energy, ell the quantum-number difference, normalizations from the
// single-well G factors at each state's own energy.
std::complex<double> well_matrix_element(double eps_a, double eps_b,
                                         bool left_well, const Device& d,
                                         const ZetaFn& zeta, int ell);

// <f2|zeta|f1> for the delocalized pair with the orthogonality correction.
std::complex<double> delocalized_matrix_element(const NearTopPair& pair,
                                                const Device& d,
                                                const ZetaFn& zeta);

// All elements needed by the kinetics at one bias point.
MatrixElementSet build_element_set(const WellLevels& levels,
                                   const NearTopPair& pair, const Device& d);

// Single-well normalization factor G (Eq.-42-style) at the given energy.
double well_norm_factor(double eps, bool left_well, const Device& d);

}  // namespace squid
