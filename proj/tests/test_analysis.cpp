#include <doctest.h>

#include <cmath>
#include <vector>

#include "emrate/analysis.hpp"

using namespace emrate;

namespace {

const std::vector<double> default_mu{1e4, 2e4, 4e4};
const QuadratureSpec slope_spec{128, 128};

double rel_dev(double value, double target) {
  return std::abs(value - target) / std::max(std::abs(target), 0.1);
}

}  // namespace

TEST_CASE("additivity residual is a pure roundoff measure") {
  CHECK(additivity_residual(DipoleAxis::z, 1.0) < 1e-12);
  CHECK(additivity_residual(DipoleAxis::y, 3.0) < 1e-12);
  // series-branch boundary
  CHECK(additivity_residual(DipoleAxis::x, 0.05) < 1e-12);
  CHECK(additivity_residual(DipoleAxis::x, 0.0499) < 1e-12);

  CHECK_THROWS_AS(additivity_residual(DipoleAxis::z, 0.0), std::invalid_argument);
}

TEST_CASE("full-physics slope recovers the closed-form total correction") {
  const SlopeEstimate est =
      first_order_slope(DipoleAxis::z, 1.0, default_mu, 0.0, slope_spec);
  const double target = correction_total(DipoleAxis::z, 1.0);
  CHECK(rel_dev(est.slope, target) < 1e-3);
  CHECK(est.error_estimate >= 0.0);
  CHECK(est.mu_list.size() == 3);
  CHECK(est.samples.size() == 3);

  const SlopeEstimate est_y =
      first_order_slope(DipoleAxis::y, 2.0, default_mu, 0.0, slope_spec);
  CHECK(rel_dev(est_y.slope, correction_total(DipoleAxis::y, 2.0)) < 1e-3);
}

TEST_CASE("mechanism toggles isolate the two corrections") {
  const double Z = 1.0;
  const SlopeEstimate rontgen =
      rontgen_toggle_slope(DipoleAxis::z, Z, default_mu, slope_spec, true, false);
  CHECK(rel_dev(rontgen.slope, correction_rontgen(DipoleAxis::z, Z)) < 1e-3);

  const SlopeEstimate recoil =
      rontgen_toggle_slope(DipoleAxis::z, Z, default_mu, slope_spec, false, true);
  CHECK(rel_dev(recoil.slope, correction_recoil(DipoleAxis::z, Z)) < 1e-3);

  const SlopeEstimate both =
      rontgen_toggle_slope(DipoleAxis::z, Z, default_mu, slope_spec, true, true);
  CHECK(std::abs(both.slope - (rontgen.slope + recoil.slope)) /
            std::max(std::abs(both.slope), 0.1) <
        2e-3);
}

TEST_CASE("slope is insensitive to the canonical momentum") {
  const double rho = 1e-4 * default_mu.front();
  const SlopeEstimate at_rest =
      first_order_slope(DipoleAxis::z, 1.0, default_mu, 0.0, slope_spec);
  const SlopeEstimate moving =
      first_order_slope(DipoleAxis::z, 1.0, default_mu, rho, slope_spec);
  CHECK(rel_dev(moving.slope, at_rest.slope) < 1e-3);
}

TEST_CASE("error estimate shrinks at least linearly in 1/mu_min") {
  const std::vector<double> doubled{2e4, 4e4, 8e4};
  for (double Z : {0.5, 2.0}) {
    const SlopeEstimate base =
        first_order_slope(DipoleAxis::z, Z, default_mu, 0.0, QuadratureSpec{64, 64});
    const SlopeEstimate far =
        first_order_slope(DipoleAxis::z, Z, doubled, 0.0, QuadratureSpec{64, 64});
    CHECK(far.error_estimate <= base.error_estimate / 2.0 + 1e-12);
  }
}

TEST_CASE("guard violations and malformed mass lists") {
  const std::vector<double> mu{1e4, 2e4};
  CHECK_THROWS_AS(first_order_slope(DipoleAxis::z, 200.0, mu, 0.0, QuadratureSpec{8, 8}),
                  GuardViolation);
  // rho/mu beyond the nonrelativistic bound
  CHECK_THROWS_AS(first_order_slope(DipoleAxis::z, 1.0, mu, 200.0, QuadratureSpec{8, 8}),
                  GuardViolation);

  const std::vector<double> single{1e4};
  CHECK_THROWS_AS(first_order_slope(DipoleAxis::z, 1.0, single, 0.0, QuadratureSpec{8, 8}),
                  std::invalid_argument);
  const std::vector<double> unsorted{2e4, 1e4};
  CHECK_THROWS_AS(first_order_slope(DipoleAxis::z, 1.0, unsorted, 0.0, QuadratureSpec{8, 8}),
                  std::invalid_argument);
}

TEST_CASE("scan rows mirror the closed-form breakdown") {
  const std::vector<double> grid{1.0};
  const std::vector<ScanRow> rows = scan(DipoleAxis::z, grid);
  REQUIRE(rows.size() == 1);
  const RateBreakdown b = breakdown(DipoleAxis::z, 1.0);
  CHECK(rows[0].Z == 1.0);
  CHECK(rows[0].gamma_boundary == b.gamma_boundary);
  CHECK(rows[0].c_total == b.c_total);
  CHECK(rows[0].c_rontgen == b.c_rontgen);
  CHECK(rows[0].c_recoil == b.c_recoil);

  const std::vector<double> dense = linear_grid(0.1, 10.0, 100);
  const std::vector<ScanRow> ys = scan(DipoleAxis::y, dense);
  for (const ScanRow& r : ys) {
    CHECK(r.c_recoil <= 0.0);
    CHECK(r.c_rontgen >= 0.0);
    CHECK(std::abs(r.c_total - (r.c_rontgen + r.c_recoil)) < 1e-12);
  }

  const std::vector<ScanRow> xs = scan(DipoleAxis::x, dense);
  REQUIRE(xs.size() == ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(xs[i].gamma_boundary == ys[i].gamma_boundary);
    CHECK(xs[i].c_total == ys[i].c_total);
    CHECK(xs[i].c_rontgen == ys[i].c_rontgen);
    CHECK(xs[i].c_recoil == ys[i].c_recoil);
  }

  const std::vector<double> bad{1.0, 0.5};
  CHECK_THROWS_AS(scan(DipoleAxis::z, bad), std::invalid_argument);
  const std::vector<double> nonpos{0.0, 1.0};
  CHECK_THROWS_AS(scan(DipoleAxis::z, nonpos), std::invalid_argument);
}

TEST_CASE("linear grid endpoints are exact") {
  const std::vector<double> g = linear_grid(0.1, 10.0, 100);
  REQUIRE(g.size() == 100);
  CHECK(g.front() == 0.1);
  CHECK(g.back() == 10.0);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);

  const std::vector<double> one = linear_grid(2.0, 5.0, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == 2.0);
}
