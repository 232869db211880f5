#include "emrate/closed_forms.hpp"

#include <cmath>
#include <numbers>

namespace emrate {

namespace closed_detail {

namespace {

// Horner in Z^2 for the even Taylor polynomials.
double even_poly(double Z, double c0, double c2, double c4, double c6) {
  const double z2 = Z * Z;
  return ((c6 * z2 + c4) * z2 + c2) * z2 + c0;
}

bool parallel_axis(DipoleAxis axis) { return axis != DipoleAxis::z; }

}  // namespace

double gamma_boundary_direct(DipoleAxis axis, double Z) {
  const double s = std::sin(Z);
  const double c = std::cos(Z);
  const double z3 = Z * Z * Z;
  if (parallel_axis(axis))
    return 1.0 - 3.0 * (Z * c + (Z * Z - 1.0) * s) / (2.0 * z3);
  return 1.0 - 3.0 * (Z * c - s) / z3;
}

double gamma_boundary_series(DipoleAxis axis, double Z) {
  if (parallel_axis(axis))
    return even_poly(Z, 0.0, 1.0 / 5.0, -3.0 / 280.0, 1.0 / 3780.0);
  return even_poly(Z, 2.0, -1.0 / 10.0, 1.0 / 280.0, -1.0 / 15120.0);
}

double correction_total_direct(DipoleAxis axis, double Z) {
  const double s = std::sin(Z);
  if (parallel_axis(axis))
    return -1.5 * (1.0 - std::cos(Z) / 2.0 - s / (2.0 * Z));
  return -1.5 * (1.0 + s / Z);
}

double correction_total_series(DipoleAxis axis, double Z) {
  if (parallel_axis(axis))
    return even_poly(Z, 0.0, -1.0 / 2.0, 3.0 / 80.0, -1.0 / 840.0);
  return even_poly(Z, -3.0, 1.0 / 4.0, -1.0 / 80.0, 1.0 / 3360.0);
}

double correction_recoil_direct(DipoleAxis axis, double Z) {
  const double s = std::sin(Z);
  const double c = std::cos(Z);
  const double z2 = Z * Z;
  const double z3 = z2 * Z;
  if (parallel_axis(axis))
    return -2.5 + 0.75 * ((z2 + 2.0) * c / z2 + (3.0 * z2 - 2.0) * s / z3);
  return -2.5 + 3.0 * (2.0 * Z * c - (z2 + 2.0) * s) / (2.0 * z3);
}

double correction_recoil_series(DipoleAxis axis, double Z) {
  if (parallel_axis(axis))
    return even_poly(Z, 0.0, -7.0 / 10.0, 27.0 / 560.0, -11.0 / 7560.0);
  return even_poly(Z, -5.0, 7.0 / 20.0, -9.0 / 560.0, 11.0 / 30240.0);
}

}  // namespace closed_detail

namespace {

using namespace closed_detail;

template <typename Direct, typename Series>
double branched(DipoleAxis axis, double Z, Direct direct, Series series) {
  if (!(Z >= 0.0))
    throw std::invalid_argument("closed forms: Z must be >= 0");
  return Z < series_crossover ? series(axis, Z) : direct(axis, Z);
}

}  // namespace

double gamma0(const Gamma0Params& params) {
  if (!(params.omega0 > 0.0))
    throw NonPositiveParameter("gamma0: omega0 must be positive");
  if (!(params.d > 0.0))
    throw NonPositiveParameter("gamma0: dipole moment must be positive");
  if (!(params.epsilon0 > 0.0))
    throw NonPositiveParameter("gamma0: epsilon0 must be positive");
  const double w3 = params.omega0 * params.omega0 * params.omega0;
  return w3 * params.d * params.d / (3.0 * std::numbers::pi * params.epsilon0);
}

double gamma_boundary(DipoleAxis axis, double Z) {
  return branched(axis, Z, gamma_boundary_direct, gamma_boundary_series);
}

double correction_total(DipoleAxis axis, double Z) {
  return branched(axis, Z, correction_total_direct, correction_total_series);
}

double correction_rontgen(DipoleAxis axis, double Z) {
  // Gamma_cR = Gamma_b omega0/m; the omega0/m factor is the reporting unit.
  return gamma_boundary(axis, Z);
}

double correction_recoil(DipoleAxis axis, double Z) {
  return branched(axis, Z, correction_recoil_direct, correction_recoil_series);
}

RateBreakdown breakdown(DipoleAxis axis, double Z) {
  return {gamma_boundary(axis, Z), correction_total(axis, Z),
          correction_rontgen(axis, Z), correction_recoil(axis, Z)};
}

}  // namespace emrate
