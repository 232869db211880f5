// Energy-momentum conservation for photon emission from a moving atom.
//
// Natural units hbar = c = 1 and the internal convention omega0 = 1: all
// frequencies are in units of omega0, momenta in units of omega0, masses as
// the ratio mu = m/omega0. The conservation condition for the emitted
// frequency reads
//
//   D(w) = omega0 - w + (rho h_x w - w^2/2) / mu = 0
//
// whose unique positive root w+ combines the Doppler shift rho h_x w / mu
// and the recoil shift w^2 / (2 mu). The delta-function Jacobian is
// G = |dD/dw| at w+.

#ifndef EMRATE_KINEMATICS_HPP
#define EMRATE_KINEMATICS_HPP

#include "emrate/errors.hpp"

namespace emrate {

struct AtomConfig {
  static constexpr double omega0 = 1.0;  // internal unit

  double mass_ratio = 1e6;     // mu = m/omega0, > 0
  double momentum = 0.0;       // rho = p/omega0, canonical, motion along x
  double plate_distance = 0.0; // Z = 2 z omega0, >= 0

  // Throws NonPositiveParameter / std::invalid_argument on malformed values.
  void validate() const;

  // rho/mu <= 0.01; above this the nonrelativistic treatment degrades.
  bool nonrelativistic() const;

  // First-order validity region of the closed forms, Z <= 0.01 * mu.
  bool within_validity_guard() const;
};

struct Shifts {
  double doppler;  // rho h_x w / mu, units of omega0
  double recoil;   // w^2 / (2 mu), units of omega0
};

struct EmissionKinematics {
  double omega_plus;  // emitted frequency, units of omega0
  double jacobian;    // G = |dD/dw| at omega_plus
  double doppler;
  double recoil;
};

// D(w) as above. include_recoil = false drops the -w^2/2 term (Doppler-only
// conservation), used by the mechanism-isolating slope analysis.
double conservation_residual(const AtomConfig& cfg, double omega, double h_x,
                             bool include_recoil = true);

// Positive root of D, evaluated in the cancellation-free form
//   w+ = 2 mu / (a + sqrt(a^2 + 2 mu)),  a = mu - rho h_x.
double emitted_frequency(const AtomConfig& cfg, double h_x, bool include_recoil = true);

// G = |dD/dw| at omega_plus: 1 + (w+ - rho h_x)/mu, or 1 - rho h_x/mu without
// the recoil term.
double jacobian(const AtomConfig& cfg, double omega_plus, double h_x,
                bool include_recoil = true);

Shifts shifts(const AtomConfig& cfg, double omega, double h_x);

EmissionKinematics emission_kinematics(const AtomConfig& cfg, double h_x,
                                       bool include_recoil = true);

}  // namespace emrate

#endif
