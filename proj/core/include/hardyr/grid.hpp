#pragma once

#include <vector>

#include "hardyr/fourier_poly.hpp"

namespace hardyr {

/// Samples of a circle function at theta_k = 2 pi k / M, M a power of two.
struct GridFunction {
  std::vector<Complex> samples;

  GridFunction() = default;
  explicit GridFunction(std::vector<Complex> s) : samples(std::move(s)) {}
  int size() const { return static_cast<int>(samples.size()); }
};

bool is_power_of_two(int m);

/// Sampling f(e^{i theta_k}), k = 0..M-1. Requires M power of two and
/// M >= 2*(hi-lo)+2 so the indices do not alias (AliasingError otherwise).
GridFunction to_grid(const FourierPoly& f, int grid_size);

/// Recover coefficients lo..hi from samples; inverse of to_grid under the
/// same anti-aliasing bound.
FourierPoly from_grid(const GridFunction& g, int lo, int hi,
                      double drop_tol = kDefaultDropTol);

namespace detail {
/// In-place radix-2 transform, x[k] <- sum_m x[m] e^{sign * 2 pi i k m / M},
/// unnormalized. size must be a power of two.
void fft(std::vector<Complex>& x, int sign);
}  // namespace detail

}  // namespace hardyr
