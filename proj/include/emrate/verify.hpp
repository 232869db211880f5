// Self-check suite behind `emrate verify`: frame properties, conservation
// root residuals, quadrature-vs-closed-form oracle equivalence, additivity,
// sign claims, and series-branch agreement.

#ifndef EMRATE_VERIFY_HPP
#define EMRATE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "emrate/quadrature.hpp"

namespace emrate {

struct CheckResult {
  std::string name;
  bool pass;
  double worst;      // worst observed residual/deviation
  double tolerance;  // limit it was held against
};

struct VerifyOptions {
  QuadratureSpec quad{64, 64};
  std::uint64_t seed = 20240801;
  int n_random = 1000;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace emrate

#endif
