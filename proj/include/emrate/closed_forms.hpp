// Closed-form boundary rates and first-order motion corrections.
//
// All functions of the dimensionless plate distance Z = 2 z omega0. Boundary
// rates are in units of Gamma0, corrections in units of Gamma0 omega0/m, so
// the mass never enters here. Direct trigonometric forms cancel badly below
// Z ~ 0.05 (Z^3 denominators); a Taylor branch through Z^6 takes over there.

#ifndef EMRATE_CLOSED_FORMS_HPP
#define EMRATE_CLOSED_FORMS_HPP

#include "emrate/errors.hpp"
#include "emrate/matrix_elements.hpp"

namespace emrate {

struct RateBreakdown {
  double gamma_boundary;  // Gamma_b / Gamma0
  double c_total;         // total first-order correction, units Gamma0 omega0/m
  double c_rontgen;       // Rontgen-only correction
  double c_recoil;        // recoil-only correction
};

struct Gamma0Params {
  double omega0;    // transition frequency
  double d;         // dipole moment magnitude
  double epsilon0;  // vacuum permittivity
};

// Free-space rate Gamma0 = omega0^3 d^2 / (3 pi epsilon0), natural units.
// Throws NonPositiveParameter unless all parameters are positive.
double gamma0(const Gamma0Params& params);

// Fixed-atom boundary rate Gamma_b/Gamma0:
//   z: 1 - 3 (Z cos Z - sin Z) / Z^3
//   x, y: 1 - 3 (Z cos Z + (Z^2 - 1) sin Z) / (2 Z^3)
double gamma_boundary(DipoleAxis axis, double Z);

// Total first-order correction:
//   z: -(3/2) (1 + sin Z / Z)
//   x, y: -(3/2) (1 - cos Z / 2 - sin Z / (2Z))
double correction_total(DipoleAxis axis, double Z);

// Rontgen-only correction; equals the boundary rate in these units.
double correction_rontgen(DipoleAxis axis, double Z);

// Recoil-only correction:
//   z: -5/2 + 3 (2 Z cos Z - (Z^2 + 2) sin Z) / (2 Z^3)
//   x, y: -5/2 + (3/4) ((Z^2 + 2) cos Z / Z^2 + (3 Z^2 - 2) sin Z / Z^3)
double correction_recoil(DipoleAxis axis, double Z);

RateBreakdown breakdown(DipoleAxis axis, double Z);

namespace closed_detail {

// Both branches exposed so the crossover agreement is testable.
inline constexpr double series_crossover = 0.05;

double gamma_boundary_direct(DipoleAxis axis, double Z);
double gamma_boundary_series(DipoleAxis axis, double Z);
double correction_total_direct(DipoleAxis axis, double Z);
double correction_total_series(DipoleAxis axis, double Z);
double correction_recoil_direct(DipoleAxis axis, double Z);
double correction_recoil_series(DipoleAxis axis, double Z);

}  // namespace closed_detail

}  // namespace emrate

#endif
