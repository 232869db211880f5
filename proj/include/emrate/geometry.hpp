// Emission-direction geometry: the unit wavevector h and the transverse
// polarization frame {e1, e2} attached to it, plus the magnetic-field
// directions b_l = h x e_l.
//
// Conventions (half-space above a conducting plate at z = 0):
//   h  = (sin t cos p, sin t sin p, cos t)
//   e1 = i (-sin p, cos p, 0)
//   e2 = (-cos t cos p, -cos t sin p, sin t)
// e1 carries an explicit factor i, so both polarizations are stored complex.

#ifndef EMRATE_GEOMETRY_HPP
#define EMRATE_GEOMETRY_HPP

#include <complex>

#include "emrate/errors.hpp"

namespace emrate {

using Complex = std::complex<double>;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const;
};

struct CVec3 {
  Complex x, y, z;

  // Hermitian inner product <this|o> = sum conj(this_i) * o_i
  Complex dot(const CVec3& o) const;
  double norm() const;
};

// b = a x v with real a, complex v (componentwise complex arithmetic)
CVec3 cross(const Vec3& a, const CVec3& v);

// Frames are rejected below this sin(theta); the basis divides by k_parallel.
inline constexpr double pole_tolerance = 1e-12;

struct TransverseFrame {
  Vec3 h;    // unit wavevector
  CVec3 e1;  // in-plane polarization, e1 = i(-h_y, h_x, 0)/h_par
  CVec3 e2;  // meridional polarization, e2 = (-h_x h_z, -h_y h_z, h_par^2)/h_par
  CVec3 b1;  // h x e1
  CVec3 b2;  // h x e2
};

// (theta, phi) -> unit vector; theta in [0, pi], phi in [0, 2pi).
Vec3 unit_wavevector(double theta, double phi);

// Build the frame at (theta, phi). Throws PoleSingularity when
// sin(theta) < pole_tolerance.
TransverseFrame transverse_frame(double theta, double phi);

// Same frame parameterized by u = cos(theta); used by the quadrature where
// nodes live in u. sin(theta) = sqrt(1 - u^2) >= 0.
TransverseFrame transverse_frame_cos(double cos_theta, double phi);

// max_{i,j} | sum_l (e_l)_i (e_l)_j^* - (delta_ij - h_i h_j) |
double completeness_residual(const TransverseFrame& frame);

}  // namespace emrate

#endif
