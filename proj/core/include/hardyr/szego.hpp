#pragma once

#include <vector>

#include "hardyr/tolerance.hpp"

namespace hardyr {

/// Nonnegative weight samples w(theta_k) at theta_k = 2 pi k / M, M a power
/// of two. Construction enforces w >= 0 and the reflection symmetry
/// w(theta_k) = w(-theta_k), the sample-level meaning of w = w* for a
/// real-valued weight.
class Weight {
 public:
  static Weight create(std::vector<double> samples, double floor = 1e-12,
                       const ToleranceConfig& tol = {});

  const std::vector<double>& samples() const { return samples_; }
  double floor() const { return floor_; }
  int size() const { return static_cast<int>(samples_.size()); }

 private:
  Weight() = default;
  std::vector<double> samples_;
  double floor_ = 1e-12;
};

/// exp of the grid average of log w; returns 0 when any sample falls below
/// the weight floor (log w is then not grid-integrable).
double geometric_mean(const Weight& w);

/// Minimum of (1/M) sum_k w(theta_k) |1 - f(e^{i theta_k})|^2 over
/// f = sum_{j=1..degree} c_j z^j with REAL coefficients, by the symmetric
/// normal equations solved through an eigendecomposition with relative
/// cutoff 1e-12 (singular Gram systems get the least-norm solution).
/// Monotone nonincreasing in degree; requires 1 <= degree <= M/4.
double szego_infimum_ls(const Weight& w, int degree);

/// Same objective minimized over complex coefficients; the comparison route
/// for the real-vs-complex equality on symmetric weights.
double szego_infimum_ls_complex(const Weight& w, int degree);

}  // namespace hardyr
