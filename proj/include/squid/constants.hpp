#pragma once

// Physical constants, SI 2019 exact definitions (CODATA).
namespace squid::consts {

inline constexpr double h_planck = 6.62607015e-34;        // J s
inline constexpr double hbar     = 1.0545718176461565e-34;  // J s, h/2pi
inline constexpr double e_charge = 1.602176634e-19;       // C
inline constexpr double k_B      = 1.380649e-23;          // J/K
inline constexpr double Phi0     = 2.067833848461929e-15;   // Wb, h/2e

}  // namespace squid::consts
