#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hardyr/fourier_poly.hpp"
#include "hardyr/grid.hpp"
#include "hardyr/rational.hpp"

namespace hardyr {

/// Inner-outer split f = sign * inner * outer.
///
/// inner is z^m times a Blaschke product over the roots strictly inside the
/// disk, normalized so its lowest-order Taylor coefficient is real positive.
/// outer collects the remaining factors (an exact polynomial for polynomial
/// input). For real-type input both factors are real-type and outer is also
/// canonicalized to a positive lowest coefficient; sign restores f.
struct FactorizationResult {
  RationalDiskFunction inner;
  FourierPoly outer;
  int sign = 1;
  double residual = 0.0;  // L2 reconstruction error of f - sign*inner*outer
};

/// B(z) = z^origin_order * prod_a (|a|/a)(a - z)/(1 - conj(a) z).
/// Unimodular on the circle; vanishes exactly at the given zeros and to the
/// given order at 0; the lowest Taylor coefficient is |prod a| > 0.
RationalDiskFunction blaschke_product(std::span<const Complex> zeros,
                                      int origin_order = 0);

/// Harmonic conjugate: coefficient at n multiplied by -i*sgn(n).
/// f + i*conjugate_function(f) has no negative-index coefficients.
FourierPoly conjugate_function(const FourierPoly& f);

/// Analytic u = exp(P[log m] + i Q[log m]) truncated at `degree`, from strictly
/// positive boundary modulus samples. |u| matches m on the grid up to the
/// truncation tail and log|u(0)| equals the grid mean of log m.
FourierPoly outer_from_modulus(const GridFunction& modulus, int degree);

struct InnerOuterOptions {
  /// Roots with |root| in (1-boundary_eps, 1+boundary_eps) are classified as
  /// boundary and assigned to the outer factor.
  double boundary_eps = 1e-8;
  ToleranceConfig tol{};
  int residual_grid = 0;  // 0 = automatic
};

FactorizationResult inner_outer(const FourierPoly& f,
                                const InnerOuterOptions& options = {});

struct RieszOptions {
  int outer_degree = 256;
  int grid_size = 4096;
  int result_degree = 512;  // truncation of f1 = inner * g
  InnerOuterOptions inner_outer{};
};

/// Riesz split of an analytic real-type f: f = f1 * f2 with
/// ||f||_1 = ||f1||_2^2 = ||f2||_2^2, f1 = (sign*inner)*g, f2 = g,
/// g = outer_from_modulus(sqrt|f|).
struct RieszFactorization {
  FourierPoly f1, f2;
};

RieszFactorization riesz_factorize(const FourierPoly& f,
                                   const RieszOptions& options = {});

/// Roots of an analytic polynomial via companion-matrix eigenvalues
/// (the zero at the origin of order f.lo() is not included).
std::vector<Complex> polynomial_roots(const FourierPoly& f);

}  // namespace hardyr
