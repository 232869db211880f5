// Solid-angle integration of the continuum-limit emission rate.
//
// Normalized by the free-space rate Gamma0, the rate is
//
//   Gamma/Gamma0 = 3/(4 pi) Int dOmega  w+^3  [sum_l F_l(w+)] / G(w+) * T(h_z w+ Z/2)
//
// with T = cos^2 for the z-dipole and T = sin^2 for x/y-dipoles. The measure
// is Gauss-Legendre in u = cos(theta) times a uniform (trapezoidal) azimuthal
// rule; the prefactor is fixed by the fixed-atom limit reproducing the
// closed-form boundary rates.
//
// The node loop is OpenMP-parallel over theta rows. Each row is summed in a
// fixed order with compensated arithmetic and rows are combined pairwise, so
// results are bit-identical across thread counts and to the serial reference.

#ifndef EMRATE_QUADRATURE_HPP
#define EMRATE_QUADRATURE_HPP

#include <vector>

#include "emrate/matrix_elements.hpp"

namespace emrate {

struct QuadratureSpec {
  int n_theta = 64;  // Gauss-Legendre nodes in u = cos(theta), >= 2
  int n_phi = 64;    // uniform azimuthal nodes, >= 4

  void validate() const;  // throws InvalidOrder
};

struct GaussLegendre {
  std::vector<double> nodes;    // in (-1, 1), ascending
  std::vector<double> weights;  // positive, sum = 2
};

// n-point Gauss-Legendre rule on [-1, 1], exact through degree 2n-1.
// Throws InvalidOrder for n < 2.
GaussLegendre gauss_legendre_nodes(int n);

// Which 1/mu mechanisms enter the integrand. `rontgen` keeps the 1/mu terms
// of the matrix elements; `recoil` keeps the -w^2/2mu term of the
// conservation condition. The Doppler term stays on in both.
struct PhysicsToggles {
  bool rontgen = true;
  bool recoil = true;
};

enum class Exec { serial, parallel };

// Exact finite-mass rate Gamma/Gamma0.
double rate_numeric(DipoleAxis axis, const AtomConfig& cfg, const QuadratureSpec& spec,
                    PhysicsToggles toggles = {}, Exec exec = Exec::parallel);

// Fixed-atom limit: w = omega0, G = 1, dipole pattern 1 - h_axis^2.
// Reproduces the closed-form boundary rates Gamma_b/Gamma0.
double rate_numeric_fixed(DipoleAxis axis, double Z, const QuadratureSpec& spec,
                          Exec exec = Exec::parallel);

}  // namespace emrate

#endif
