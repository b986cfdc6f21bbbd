#pragma once

#include <Eigen/Dense>
#include <set>
#include <span>
#include <vector>

#include "hardyr/fourier_poly.hpp"
#include "hardyr/rational.hpp"

namespace hardyr {

/// Orthonormal real-coefficient basis of a truncated shift-invariant subspace
/// of H^2 with real coefficients. Columns of `vectors` hold coefficients
/// 0..budget-1; the real inner product is the coefficient dot product.
///
/// safe_degree = budget - max generator degree - max shift power: below it the
/// truncation agrees with the untruncated subspace, so every structural
/// statement is tested on coefficients of index < safe_degree only.
struct SubspaceBasis {
  Eigen::MatrixXd vectors;
  int budget = 0;
  int safe_degree = 0;

  int dimension() const { return static_cast<int>(vectors.cols()); }
  std::vector<FourierPoly> polys(double drop_tol = kDefaultDropTol) const;
};

/// Orthonormal basis of span{ z^w g : g generator, w in the monoid generated
/// by `powers`, w + deg g < budget }, by modified Gram-Schmidt with one
/// re-orthogonalization pass. powers must be {1} or {2,3}; generators must be
/// nonzero, analytic and real-type; budget >= 4*(max generator degree + 4).
SubspaceBasis generate_invariant(std::span<const FourierPoly> generators,
                                 const std::set<int>& powers, int budget);

/// Unit vector spanning M (-) zM below the safe degree, sign-canonicalized.
/// For M generated from a real-type Blaschke numerator this converges to the
/// Taylor series of the corresponding Blaschke product. Throws
/// DoublyInvariantError when the complement is numerically zero.
FourierPoly wandering_vector(const SubspaceBasis& m);

enum class SubspaceForm { Beurling, Constrained, Full, Undetermined };

const char* to_string(SubspaceForm form);

struct ClassificationResult {
  SubspaceForm form = SubspaceForm::Undetermined;
  FourierPoly phi;                  // candidate inner, real-type, sign-canonical
  RationalDiskFunction phi_rational;  // exact rational recovered from factoring
  double c = 0.0;                   // Constrained form only
  double fit = 0.0;                 // subspace distance to the model
  /// Set when the recovered inner part vanishes at the origin: the z-powers
  /// were folded into phi, which is this artifact's normalization choice.
  bool origin_zero_folded = false;
};

/// Recognise the subspace below safe_degree:
///  - Full        : spans every coefficient direction,
///  - Beurling    : z-invariant, M = phi * H^2 with phi = wandering vector,
///  - Constrained : invariant under z^2, z^3 but not z,
///                  M = phi([1 + c z] (+) z^2 H^2),
///  - Undetermined: the reconstructed model misses by more than 1e-4.
ClassificationResult classify(const SubspaceBasis& m,
                              const std::set<int>& powers);

/// Largest principal-angle sine between the spans restricted below the common
/// safe degree. 0 iff equal spans, symmetric, <= 1.
double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b);

namespace detail {
/// Basis (columns) of the elements of span(basis) supported on [0, window),
/// i.e. the window-restricted subspace used by all classification steps.
Eigen::MatrixXd window_restrict(const Eigen::MatrixXd& basis, int window,
                                double rank_tol = 1e-9);
}  // namespace detail

}  // namespace hardyr
