#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "hardyr/fourier_poly.hpp"
#include "hardyr/rational.hpp"

namespace hardyr {

/// Disk nodes with target values, plus the real/conjugate bookkeeping of the
/// real-symmetric problem: r = number of real nodes, s = number of indices
/// with both node and value real, permutation = reordering placing the real
/// nodes first (real-and-real-valued ones leading).
class InterpolationProblem {
 public:
  static constexpr double kBoundaryEps = 1e-8;
  static constexpr double kMinNodeGap = 1e-10;

  /// Validates |z_j| < 1 - eps and pairwise distinctness.
  static InterpolationProblem create(std::span<const Complex> nodes,
                                     std::span<const Complex> values,
                                     const ToleranceConfig& tol = {});

  /// No distinctness validation; used for the augmented problem, whose
  /// deliberate duplicates are handled by the matrix test.
  static InterpolationProblem unchecked(std::vector<Complex> nodes,
                                        std::vector<Complex> values,
                                        const ToleranceConfig& tol = {});

  const std::vector<Complex>& nodes() const { return nodes_; }
  const std::vector<Complex>& values() const { return values_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int real_node_count() const { return r_; }       // r
  int real_pair_count() const { return s_; }       // s
  const std::vector<int>& permutation() const { return perm_; }

 private:
  InterpolationProblem() = default;
  void derive(const ToleranceConfig& tol);

  std::vector<Complex> nodes_, values_;
  std::vector<int> perm_;
  int r_ = 0, s_ = 0;
};

/// Entry (i,j) = (1 - w_i conj(w_j)) / (1 - z_i conj(z_j)). Validates nodes
/// in the open disk and pairwise distinct (NodeOnBoundary / DuplicateNodes).
Eigen::MatrixXcd pick_matrix(std::span<const Complex> nodes,
                             std::span<const Complex> values);

/// Node list extended by the real nodes with non-real values (duplicated
/// verbatim) and by the conjugates of the non-real nodes; value list extended
/// by the matching conjugates. Output length 2n - s, ordered real-first.
InterpolationProblem augment_real(const InterpolationProblem& problem);

struct PickReport {
  Eigen::MatrixXcd matrix;    // augmented Pick matrix
  double min_eigenvalue = 0.0;
  bool solvable = false;
  /// Original indices of real nodes carrying non-real target values; each
  /// forces a negative 2x2 block determinant, hence unsolvability.
  std::vector<int> forced_real_violations;
};

PickReport np_solvable_real(const InterpolationProblem& problem,
                            const ToleranceConfig& tol = {});

/// Rational interpolant plus its Taylor truncation (degree 128 by default).
struct NPSolution {
  RationalDiskFunction rational;
  FourierPoly taylor;
};

inline constexpr int kInterpolantTaylorDegree = 128;

/// Classical Nevanlinna-Pick: rational f with sup|f| <= 1 and f(z_j) = w_j,
/// by the Nevanlinna recursion (one disk-automorphism reduction per node).
/// Throws NotSolvableError when the Pick matrix is not PSD within psd_tol.
NPSolution np_solve(std::span<const Complex> nodes,
                    std::span<const Complex> values,
                    const ToleranceConfig& tol = {});

/// Real-symmetric solution: solve the augmented classical problem, then apply
/// the projection through g(z) = (f(z) + conj f(conj z))/2, carried out
/// exactly on the rational representation. `classical` is the intermediate
/// complex solution f.
struct NPRealSolution {
  RationalDiskFunction rational;  // g, real-type
  FourierPoly taylor;             // degree-128 truncation of g
  RationalDiskFunction classical; // f
};

NPRealSolution np_solve_real(const InterpolationProblem& problem,
                             const ToleranceConfig& tol = {});

/// Caratheodory-Fejer data: prescribed Taylor coefficients a_0..a_n.
struct CFProblem {
  std::vector<Complex> taylor;
};

/// Lower-triangular Toeplitz matrix with entry (i,j) = a_{i-j} for i >= j.
Eigen::MatrixXcd cf_toeplitz(const CFProblem& problem);

/// Schur-recursion solution of the CF problem: analytic rational f with
/// sup|f| <= 1 whose Taylor coefficients 0..n equal the data. Throws
/// NotContractionError unless the Toeplitz matrix is a contraction within
/// psd_tol. Real data yields a real-type solution.
NPSolution cf_solve(const CFProblem& problem, const ToleranceConfig& tol = {});

struct InterpolationCheck {
  std::vector<double> residuals;
  double max_residual = 0.0;
  double sup_norm = 0.0;
  bool real_type = false;
  bool pass = false;
};

/// Boundedness on the circle grid, per-node residuals, and the real-type flag.
InterpolationCheck verify_interpolant(const RationalDiskFunction& f,
                                      std::span<const Complex> nodes,
                                      std::span<const Complex> values,
                                      double tol,
                                      bool require_real_type = false,
                                      int grid_size = 1024);
InterpolationCheck verify_interpolant(const FourierPoly& f,
                                      std::span<const Complex> nodes,
                                      std::span<const Complex> values,
                                      double tol,
                                      bool require_real_type = false,
                                      int grid_size = 1024);

}  // namespace hardyr
