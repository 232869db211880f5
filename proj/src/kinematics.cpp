#include "emrate/kinematics.hpp"

#include <cmath>
#include <string>

namespace emrate {

void AtomConfig::validate() const {
  if (!(mass_ratio > 0.0) || !std::isfinite(mass_ratio))
    throw NonPositiveParameter("AtomConfig: mass_ratio must be positive, got " +
                               std::to_string(mass_ratio));
  if (!std::isfinite(momentum))
    throw std::invalid_argument("AtomConfig: momentum must be finite");
  if (!(plate_distance >= 0.0) || !std::isfinite(plate_distance))
    throw std::invalid_argument("AtomConfig: plate_distance must be >= 0");
}

bool AtomConfig::nonrelativistic() const {
  return std::abs(momentum) / mass_ratio <= 0.01;
}

bool AtomConfig::within_validity_guard() const {
  return plate_distance <= 0.01 * mass_ratio;
}

double conservation_residual(const AtomConfig& cfg, double omega, double h_x,
                             bool include_recoil) {
  const double kinetic = cfg.momentum * h_x * omega -
                         (include_recoil ? 0.5 * omega * omega : 0.0);
  return cfg.omega0 - omega + kinetic / cfg.mass_ratio;
}

double emitted_frequency(const AtomConfig& cfg, double h_x, bool include_recoil) {
  const double a = cfg.mass_ratio - cfg.momentum * h_x;  // m - p h_x
  if (!include_recoil)
    return cfg.omega0 * cfg.mass_ratio / a;
  // w+ = h_x p - m + sqrt((m - h_x p)^2 + 2 omega0 m), rationalized so the
  // large-mu difference of near-equal terms never forms.
  return 2.0 * cfg.omega0 * cfg.mass_ratio /
         (a + std::sqrt(a * a + 2.0 * cfg.omega0 * cfg.mass_ratio));
}

double jacobian(const AtomConfig& cfg, double omega_plus, double h_x,
                bool include_recoil) {
  if (!include_recoil)
    return 1.0 - cfg.momentum * h_x / cfg.mass_ratio;
  return 1.0 + (omega_plus - cfg.momentum * h_x) / cfg.mass_ratio;
}

Shifts shifts(const AtomConfig& cfg, double omega, double h_x) {
  return {cfg.momentum * h_x * omega / cfg.mass_ratio,
          omega * omega / (2.0 * cfg.mass_ratio * cfg.omega0)};
}

EmissionKinematics emission_kinematics(const AtomConfig& cfg, double h_x,
                                       bool include_recoil) {
  const double w = emitted_frequency(cfg, h_x, include_recoil);
  const Shifts s = shifts(cfg, w, h_x);
  return {w, jacobian(cfg, w, h_x, include_recoil), s.doppler, s.recoil};
}

}  // namespace emrate
