#pragma once

#include <stdexcept>

namespace hardyr {

/// Numerical tolerances shared across the toolkit.
///
/// eq_tol   - relative tolerance for value comparisons (FFT / root-finding
///            noise floor at double precision).
/// psd_tol  - eigenvalue floor scale for positive-semidefiniteness tests.
/// drop_tol - coefficient pruning threshold, relative to the largest
///            coefficient magnitude of the polynomial at hand.
struct ToleranceConfig {
  double eq_tol = 1e-9;
  double psd_tol = 1e-9;
  double drop_tol = 1e-14;

  void validate() const {
    if (!(eq_tol > 0.0) || !(psd_tol > 0.0) || !(drop_tol > 0.0))
      throw std::invalid_argument("ToleranceConfig: tolerances must be strictly positive");
    if (eq_tol < drop_tol)
      throw std::invalid_argument("ToleranceConfig: eq_tol must be >= drop_tol");
  }
};

inline constexpr double kDefaultEqTol = 1e-9;
inline constexpr double kDefaultPsdTol = 1e-9;
inline constexpr double kDefaultDropTol = 1e-14;

}  // namespace hardyr
