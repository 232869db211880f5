// Cross-validation of the quadrature and closed-form paths.
//
// The first-order coefficient of the 1/mu expansion is recovered from the
// exact rates by Richardson extrapolation of s(mu) = mu (Gamma_num - Gamma_b)
// / Gamma0 under the model s = s_inf + a/mu, and compared against the
// closed-form corrections. Mechanism toggles isolate the Rontgen and recoil
// contributions the same way the closed forms do.

#ifndef EMRATE_ANALYSIS_HPP
#define EMRATE_ANALYSIS_HPP

#include <span>
#include <vector>

#include "emrate/closed_forms.hpp"
#include "emrate/quadrature.hpp"

namespace emrate {

struct SlopeEstimate {
  double slope;           // extrapolated s_inf, units Gamma0 omega0/m
  double error_estimate;  // half-width of the final extrapolants, >= 0
  std::vector<double> mu_list;
  std::vector<double> samples;  // s(mu) per mass, same order as mu_list
};

struct ScanRow {
  double Z;
  DipoleAxis axis;
  double gamma_boundary;
  double c_total;
  double c_rontgen;
  double c_recoil;
};

// |c_total - (c_rontgen + c_recoil)| from the closed forms; additivity is an
// algebraic identity of those formulas, so this measures only roundoff.
double additivity_residual(DipoleAxis axis, double Z);

// Slope of the full-physics rate. mu_list must be strictly increasing with
// >= 2 entries; rho is one absolute canonical momentum applied to every mass
// (so its O(rho^2/mu) footprint stays inside the extrapolation model).
// Throws GuardViolation when Z > 0.01 * mu_front or rho/mu_front > 0.01,
// unless enforce_guard is cleared (forced runs).
SlopeEstimate first_order_slope(DipoleAxis axis, double Z,
                                std::span<const double> mu_list, double rho,
                                const QuadratureSpec& spec,
                                bool enforce_guard = true);

// Slope with only the selected mechanisms in the integrand (rho = 0).
// Rontgen only -> matches correction_rontgen; recoil only -> correction_recoil.
SlopeEstimate rontgen_toggle_slope(DipoleAxis axis, double Z,
                                   std::span<const double> mu_list,
                                   const QuadratureSpec& spec,
                                   bool include_rontgen, bool include_recoil,
                                   bool enforce_guard = true);

// Closed-form breakdown per grid point (grid strictly increasing, Z > 0).
std::vector<ScanRow> scan(DipoleAxis axis, std::span<const double> Z_grid);

// Inclusive linear grid with `count` points from start to stop.
std::vector<double> linear_grid(double start, double stop, int count);

}  // namespace emrate

#endif
