// Squared dipole matrix elements per polarization, exact in 1/mu, and their
// polarization sums expanded to first order in 1/mu.
//
// With b_l = h x e_l the exact per-polarization moduli are
//   z-dipole: |(e_l)_z + ((rho - h_x w/2)(b_l)_y + (h_y w/2)(b_l)_x) / mu|^2
//   y-dipole: |(e_l)_y - ((rho - h_x w/2)(b_l)_z + (h_z w/2)(b_l)_x) / mu|^2
//   x-dipole: |(e_l)_x - ((h_y w/2)(b_l)_z  - (h_z w/2)(b_l)_y) / mu|^2
// and the first-order polarization sums
//   z: 1 - h_z^2 + ((h_x^2 + h_y^2) w - 2 rho h_x) / mu
//   y: 1 - h_y^2 + ((h_x^2 + h_z^2) w - 2 rho h_x) / mu
//   x: 1 - h_x^2 + (h_y^2 + h_z^2) w / mu

#ifndef EMRATE_MATRIX_ELEMENTS_HPP
#define EMRATE_MATRIX_ELEMENTS_HPP

#include <string>

#include "emrate/geometry.hpp"
#include "emrate/kinematics.hpp"

namespace emrate {

// Dipole orientation: z normal to the plate, x along the motion.
enum class DipoleAxis { x, y, z };

char axis_letter(DipoleAxis axis);
DipoleAxis axis_from_letter(const std::string& s);  // "x"/"y"/"z"

struct PolarizationPair {
  double f1;  // lambda = 1
  double f2;  // lambda = 2
};

// Exact squared matrix elements at frequency omega (independent argument;
// the quadrature binds omega = omega_plus). rontgen_terms = false drops the
// 1/mu pieces, leaving the fixed-atom |(e_l)_axis|^2.
PolarizationPair f_exact(DipoleAxis axis, const TransverseFrame& frame,
                         const AtomConfig& cfg, double omega,
                         bool rontgen_terms = true);

// Polarization sum expanded to first order in 1/mu; |h| must be 1.
double f_sum_first_order(DipoleAxis axis, const Vec3& h, const AtomConfig& cfg,
                         double omega);

}  // namespace emrate

#endif
