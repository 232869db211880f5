#include "emrate/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "emrate/analysis.hpp"
#include "emrate/closed_forms.hpp"

namespace emrate {

namespace {

constexpr DipoleAxis all_axes[3] = {DipoleAxis::x, DipoleAxis::y, DipoleAxis::z};

double frame_invariant_residual(const TransverseFrame& f) {
  double worst = std::abs(f.h.norm() - 1.0);
  worst = std::max(worst, std::abs(f.e1.norm() - 1.0));
  worst = std::max(worst, std::abs(f.e2.norm() - 1.0));
  const CVec3 hc{f.h.x, f.h.y, f.h.z};
  worst = std::max(worst, std::abs(f.e1.dot(hc)));
  worst = std::max(worst, std::abs(f.e2.dot(hc)));
  worst = std::max(worst, std::abs(f.b1.norm() - 1.0));
  worst = std::max(worst, std::abs(f.b2.norm() - 1.0));
  worst = std::max(worst, std::abs(f.b1.dot(hc)));
  worst = std::max(worst, std::abs(f.b2.dot(hc)));
  const CVec3 c1 = cross(f.h, f.e1);
  const CVec3 c2 = cross(f.h, f.e2);
  worst = std::max({worst, std::abs(c1.x - f.b1.x), std::abs(c1.y - f.b1.y),
                    std::abs(c1.z - f.b1.z), std::abs(c2.x - f.b2.x),
                    std::abs(c2.y - f.b2.y), std::abs(c2.z - f.b2.z)});
  return worst;
}

CVec3 rotate_z(const CVec3& v, double delta) {
  const double c = std::cos(delta), s = std::sin(delta);
  return {c * v.x - s * v.y, s * v.x + c * v.y, v.z};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  std::vector<CheckResult> results;
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto record = [&results](const std::string& name, double worst, double tol) {
    results.push_back({name, worst <= tol, worst, tol});
  };

  // polarization-frame completeness and triad invariants at random angles
  {
    double worst_completeness = 0.0, worst_invariant = 0.0, worst_rotation = 0.0;
    for (int i = 0; i < opt.n_random; ++i) {
      const double u = -0.999999 + 1.999998 * unit(rng);
      const double phi = 2.0 * std::numbers::pi * unit(rng);
      const TransverseFrame f = transverse_frame_cos(u, phi);
      worst_completeness = std::max(worst_completeness, completeness_residual(f));
      worst_invariant = std::max(worst_invariant, frame_invariant_residual(f));

      // rotating phi by delta must rotate every frame vector about z
      const double delta = 2.0 * std::numbers::pi * unit(rng);
      const TransverseFrame g = transverse_frame_cos(u, phi + delta);
      const CVec3* fv[4] = {&f.e1, &f.e2, &f.b1, &f.b2};
      const CVec3* gv[4] = {&g.e1, &g.e2, &g.b1, &g.b2};
      for (int k = 0; k < 4; ++k) {
        const CVec3 r = rotate_z(*fv[k], delta);
        worst_rotation = std::max({worst_rotation, std::abs(r.x - gv[k]->x),
                                   std::abs(r.y - gv[k]->y), std::abs(r.z - gv[k]->z)});
      }
    }
    record("frame completeness residual", worst_completeness, 1e-13);
    record("frame triad invariants", worst_invariant, 1e-13);
    record("frame phi-rotation covariance", worst_rotation, 1e-13);
  }

  // conservation root residual and Jacobian consistency at random kinematics
  {
    double worst_root = 0.0, worst_jac = 0.0;
    for (int i = 0; i < opt.n_random; ++i) {
      const double mu = std::pow(10.0, 1.0 + 11.0 * unit(rng));  // 10 .. 1e12
      const double rho = 0.01 * mu * unit(rng);
      const double h_x = -1.0 + 2.0 * unit(rng);
      const AtomConfig cfg{mu, rho, 0.0};
      const double w = emitted_frequency(cfg, h_x);
      worst_root = std::max(worst_root, std::abs(conservation_residual(cfg, w, h_x)));

      // centered difference of D vs the closed-form Jacobian
      const double dw = 1e-6;
      const double fd = (conservation_residual(cfg, w + dw, h_x) -
                         conservation_residual(cfg, w - dw, h_x)) /
                        (2.0 * dw);
      worst_jac = std::max(worst_jac, std::abs(std::abs(fd) - jacobian(cfg, w, h_x)));
    }
    record("conservation root residual |D(w+)|", worst_root, 1e-12);
    record("Jacobian vs finite difference of D", worst_jac, 1e-8);
  }

  // heavy-mass expansion: w+ = 1 + (rho h_x - 1/2)/mu + O(1/mu^2)
  {
    double worst = 0.0;
    const double rho = 2.0, h_x = 0.3;
    double prev = 0.0;
    for (double mu : {1e3, 1e4, 1e5}) {
      const AtomConfig cfg{mu, rho, 0.0};
      const double resid = std::abs(emitted_frequency(cfg, h_x) -
                                    (1.0 + (rho * h_x - 0.5) / mu));
      // each decade in mu must shrink the residual ~100x; allow 10x slack
      if (prev > 0.0) worst = std::max(worst, resid / prev * 100.0 / 10.0);
      prev = resid;
    }
    record("heavy-mass frequency expansion decay", worst, 1.0);
  }

  // quadrature vs closed-form boundary rates, Z in {0.1, ..., 10}
  {
    double worst = 0.0;
    for (DipoleAxis axis : all_axes) {
      for (int i = 1; i <= 100; ++i) {
        const double Z = 0.1 * i;
        const double num = rate_numeric_fixed(axis, Z, opt.quad);
        const double ref = gamma_boundary(axis, Z);
        worst = std::max(worst, std::abs(num - ref) / std::abs(ref));
      }
    }
    record("fixed-atom quadrature vs closed form", worst, 1e-9);
  }

  // additivity and sign claims on a dense grid
  {
    double worst_add = 0.0;
    double worst_sign = 0.0;  // positive when a sign claim is violated
    for (DipoleAxis axis : all_axes) {
      for (int i = 1; i <= 1000; ++i) {
        const double Z = 50.0 * i / 1000.0;
        worst_add = std::max(worst_add, additivity_residual(axis, Z));
        worst_sign = std::max(worst_sign, -correction_rontgen(axis, Z));
        if (Z <= 10.0)
          worst_sign = std::max(worst_sign, correction_recoil(axis, Z));
      }
    }
    record("correction additivity residual", worst_add, 1e-12);
    record("Rontgen >= 0 and recoil <= 0 signs", worst_sign, 0.0);
  }

  // series and direct closed-form branches agree at the crossover
  {
    using namespace closed_detail;
    const double Z0 = series_crossover;
    double worst = 0.0;
    for (DipoleAxis axis : all_axes) {
      worst = std::max(worst, std::abs(gamma_boundary_direct(axis, Z0) -
                                       gamma_boundary_series(axis, Z0)));
      worst = std::max(worst, std::abs(correction_total_direct(axis, Z0) -
                                       correction_total_series(axis, Z0)));
      worst = std::max(worst, std::abs(correction_recoil_direct(axis, Z0) -
                                       correction_recoil_series(axis, Z0)));
    }
    record("series/direct agreement at crossover", worst, 1e-12);
  }

  // x and y dipoles are degenerate in both paths
  {
    double worst = 0.0;
    for (double Z : {0.5, 1.0, 2.0, 5.0}) {
      worst = std::max(worst, std::abs(gamma_boundary(DipoleAxis::x, Z) -
                                       gamma_boundary(DipoleAxis::y, Z)));
      worst = std::max(worst, std::abs(rate_numeric_fixed(DipoleAxis::x, Z, opt.quad) -
                                       rate_numeric_fixed(DipoleAxis::y, Z, opt.quad)));
    }
    record("x/y dipole degeneracy", worst, 1e-12);
  }

  // quadrature rate is identical across serial and parallel execution
  {
    const AtomConfig cfg{1e6, 1.0, 1.0};
    const double serial = rate_numeric(DipoleAxis::z, cfg, opt.quad, {}, Exec::serial);
    const double parallel = rate_numeric(DipoleAxis::z, cfg, opt.quad, {}, Exec::parallel);
    record("serial/parallel bit-stability", std::abs(serial - parallel), 0.0);
  }

  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace emrate
