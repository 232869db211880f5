#include "emrate/matrix_elements.hpp"

#include <stdexcept>

namespace emrate {

char axis_letter(DipoleAxis axis) {
  switch (axis) {
    case DipoleAxis::x: return 'x';
    case DipoleAxis::y: return 'y';
    case DipoleAxis::z: return 'z';
  }
  return '?';
}

DipoleAxis axis_from_letter(const std::string& s) {
  if (s == "x") return DipoleAxis::x;
  if (s == "y") return DipoleAxis::y;
  if (s == "z") return DipoleAxis::z;
  throw std::invalid_argument("dipole axis must be one of x, y, z; got '" + s + "'");
}

namespace {

double f_one(DipoleAxis axis, const Vec3& h, const CVec3& e, const CVec3& b,
             double rho, double mu, double omega, bool rontgen_terms) {
  Complex amp;
  switch (axis) {
    case DipoleAxis::z:
      amp = e.z;
      if (rontgen_terms)
        amp += ((rho - h.x * omega / 2.0) * b.y + (h.y * omega / 2.0) * b.x) / mu;
      break;
    case DipoleAxis::y:
      amp = e.y;
      if (rontgen_terms)
        amp -= ((rho - h.x * omega / 2.0) * b.z + (h.z * omega / 2.0) * b.x) / mu;
      break;
    case DipoleAxis::x:
      amp = e.x;
      if (rontgen_terms)
        amp -= ((h.y * omega / 2.0) * b.z - (h.z * omega / 2.0) * b.y) / mu;
      break;
  }
  return std::norm(amp);
}

}  // namespace

PolarizationPair f_exact(DipoleAxis axis, const TransverseFrame& frame,
                         const AtomConfig& cfg, double omega, bool rontgen_terms) {
  const double rho = cfg.momentum;
  const double mu = cfg.mass_ratio;
  return {f_one(axis, frame.h, frame.e1, frame.b1, rho, mu, omega, rontgen_terms),
          f_one(axis, frame.h, frame.e2, frame.b2, rho, mu, omega, rontgen_terms)};
}

double f_sum_first_order(DipoleAxis axis, const Vec3& h, const AtomConfig& cfg,
                         double omega) {
  const double rho = cfg.momentum;
  const double mu = cfg.mass_ratio;
  switch (axis) {
    case DipoleAxis::z:
      return 1.0 - h.z * h.z + ((h.x * h.x + h.y * h.y) * omega - 2.0 * rho * h.x) / mu;
    case DipoleAxis::y:
      return 1.0 - h.y * h.y + ((h.x * h.x + h.z * h.z) * omega - 2.0 * rho * h.x) / mu;
    case DipoleAxis::x:
      return 1.0 - h.x * h.x + (h.y * h.y + h.z * h.z) * omega / mu;
  }
  return 0.0;
}

}  // namespace emrate
