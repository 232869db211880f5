#include "emrate/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace emrate {

namespace {

void check_mu_list(std::span<const double> mu_list, double Z, double rho,
                   bool enforce_guard) {
  if (mu_list.size() < 2)
    throw std::invalid_argument("slope extraction needs at least two masses");
  for (std::size_t i = 0; i + 1 < mu_list.size(); ++i)
    if (!(mu_list[i] < mu_list[i + 1]))
      throw std::invalid_argument("mass list must be strictly increasing");
  if (!enforce_guard) return;
  const double mu_min = mu_list.front();
  if (Z > 0.01 * mu_min)
    throw GuardViolation("Z = " + std::to_string(Z) +
                         " outside the first-order validity region for mu = " +
                         std::to_string(mu_min) + " (Z <= 0.01 mu)");
  if (std::abs(rho) / mu_min > 0.01)
    throw GuardViolation("rho/mu = " + std::to_string(std::abs(rho) / mu_min) +
                         " beyond the nonrelativistic bound 0.01");
}

SlopeEstimate slope_from_rates(DipoleAxis axis, double Z,
                               std::span<const double> mu_list, double rho,
                               const QuadratureSpec& spec, PhysicsToggles toggles,
                               bool enforce_guard) {
  check_mu_list(mu_list, Z, rho, enforce_guard);

  const double fixed = rate_numeric_fixed(axis, Z, spec);

  SlopeEstimate est;
  est.mu_list.assign(mu_list.begin(), mu_list.end());
  est.samples.reserve(mu_list.size());
  for (double mu : mu_list) {
    const AtomConfig cfg{mu, rho, Z};
    est.samples.push_back(mu * (rate_numeric(axis, cfg, spec, toggles) - fixed));
  }

  // Two-point elimination of the a/mu term over consecutive mass pairs:
  // R_i = (mu_{i+1} s_{i+1} - mu_i s_i) / (mu_{i+1} - mu_i).
  std::vector<double> extrapolants;
  for (std::size_t i = 0; i + 1 < est.samples.size(); ++i) {
    const double m0 = est.mu_list[i], m1 = est.mu_list[i + 1];
    extrapolants.push_back((m1 * est.samples[i + 1] - m0 * est.samples[i]) / (m1 - m0));
  }

  est.slope = extrapolants.back();
  if (extrapolants.size() >= 2) {
    const auto [lo, hi] = std::minmax_element(extrapolants.begin(), extrapolants.end());
    est.error_estimate = (*hi - *lo) / 2.0;
  } else {
    est.error_estimate = std::abs(extrapolants.back() - est.samples.back());
  }
  return est;
}

}  // namespace

double additivity_residual(DipoleAxis axis, double Z) {
  if (!(Z > 0.0))
    throw std::invalid_argument("additivity_residual: Z must be > 0");
  return std::abs(correction_total(axis, Z) -
                  (correction_rontgen(axis, Z) + correction_recoil(axis, Z)));
}

SlopeEstimate first_order_slope(DipoleAxis axis, double Z,
                                std::span<const double> mu_list, double rho,
                                const QuadratureSpec& spec, bool enforce_guard) {
  return slope_from_rates(axis, Z, mu_list, rho, spec, PhysicsToggles{}, enforce_guard);
}

SlopeEstimate rontgen_toggle_slope(DipoleAxis axis, double Z,
                                   std::span<const double> mu_list,
                                   const QuadratureSpec& spec,
                                   bool include_rontgen, bool include_recoil,
                                   bool enforce_guard) {
  return slope_from_rates(axis, Z, mu_list, 0.0, spec,
                          PhysicsToggles{include_rontgen, include_recoil},
                          enforce_guard);
}

std::vector<ScanRow> scan(DipoleAxis axis, std::span<const double> Z_grid) {
  for (std::size_t i = 0; i < Z_grid.size(); ++i) {
    if (!(Z_grid[i] > 0.0))
      throw std::invalid_argument("scan: grid values must be > 0");
    if (i + 1 < Z_grid.size() && !(Z_grid[i] < Z_grid[i + 1]))
      throw std::invalid_argument("scan: grid must be strictly increasing");
  }

  std::vector<ScanRow> rows;
  rows.reserve(Z_grid.size());
  for (double Z : Z_grid) {
    const RateBreakdown b = breakdown(axis, Z);
    rows.push_back({Z, axis, b.gamma_boundary, b.c_total, b.c_rontgen, b.c_recoil});
  }
  return rows;
}

std::vector<double> linear_grid(double start, double stop, int count) {
  if (count < 1) throw std::invalid_argument("linear_grid: count must be >= 1");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    grid.push_back(start);
    return grid;
  }
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i)
    grid.push_back(i == count - 1 ? stop : start + i * step);
  return grid;
}

}  // namespace emrate
