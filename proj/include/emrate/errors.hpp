// Exception types shared across the library.

#ifndef EMRATE_ERRORS_HPP
#define EMRATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace emrate {

// Polarization basis is undefined on the polar axis (k_parallel = 0).
struct PoleSingularity : std::domain_error {
  explicit PoleSingularity(const std::string& what) : std::domain_error(what) {}
};

// Quadrature rule order below the minimum.
struct InvalidOrder : std::invalid_argument {
  explicit InvalidOrder(const std::string& what) : std::invalid_argument(what) {}
};

// A physical parameter that must be positive is not.
struct NonPositiveParameter : std::invalid_argument {
  explicit NonPositiveParameter(const std::string& what) : std::invalid_argument(what) {}
};

// Requested plate distance outside the first-order validity region Z <= 0.01*mu.
struct GuardViolation : std::runtime_error {
  explicit GuardViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace emrate

#endif
