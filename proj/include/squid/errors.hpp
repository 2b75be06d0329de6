#pragma once

#include <stdexcept>
#include <string>

namespace squid {

// Base for all recoverable domain failures in the solver pipeline.
struct solver_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid SI device parameter (non-positive L, C, R, ...).
struct parameter_domain_error : solver_error {
  using solver_error::solver_error;
};

// The potential at this bias has no double well.
struct bistability_lost_error : solver_error {
  double phi_x;
  explicit bistability_lost_error(double phi_x_, const std::string& what_)
      : solver_error(what_), phi_x(phi_x_) {}
};

// Energy argument outside the admissible band.
struct energy_domain_error : solver_error {
  using solver_error::solver_error;
};

// Energy too close to the barrier top for distinct inner turning points.
struct degenerate_turning_point_error : solver_error {
  using solver_error::solver_error;
};

// Fewer level-equation roots than requested in the scan window.
struct not_enough_levels_error : solver_error {
  using solver_error::solver_error;
};

// No simultaneous root of the two phase conditions in the bracket.
struct no_crossing_error : solver_error {
  using solver_error::solver_error;
};

// No bound level below the requested ceiling.
struct empty_well_error : solver_error {
  using solver_error::solver_error;
};

// Transition pair violates the near-resonance gate of the rate formula.
struct resonance_mismatch_error : solver_error {
  using solver_error::solver_error;
};

// Kinetics denominator collapsed (cannot happen with nonzero decay; guarded).
struct degenerate_kinetics_error : solver_error {
  using solver_error::solver_error;
};

// Grid diagonalization failed to converge under grid doubling.
struct oracle_convergence_error : solver_error {
  using solver_error::solver_error;
};

// Config file syntax or range problem; carries a 1-based line number (0 = n/a).
struct config_error : std::runtime_error {
  int line;
  explicit config_error(const std::string& what_, int line_ = 0)
      : std::runtime_error(what_), line(line_) {}
};

}  // namespace squid
