#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "hardyr/tolerance.hpp"

namespace hardyr {

using Complex = std::complex<double>;

/// Finite Laurent series sum a_n z^n on the unit circle, stored sparsely by
/// signed index n. Values are immutable after construction; every operation
/// below is a pure function, so concurrent use needs no synchronisation.
///
/// The empty coefficient map is the canonical zero: lo()/hi() are then
/// undefined (they throw) and all norms are 0. Construction prunes
/// coefficients whose magnitude falls below drop_tol relative to the largest
/// coefficient.
class FourierPoly {
 public:
  using CoeffMap = std::map<int, Complex>;

  FourierPoly() = default;
  explicit FourierPoly(CoeffMap coeffs, double drop_tol = kDefaultDropTol);

  static FourierPoly constant(Complex a);
  static FourierPoly monomial(int n, Complex a = 1.0);
  /// Analytic polynomial from Taylor coefficients a[0], a[1], ...
  static FourierPoly from_taylor(std::span<const Complex> a,
                                 double drop_tol = kDefaultDropTol);
  static FourierPoly from_taylor(std::span<const double> a,
                                 double drop_tol = kDefaultDropTol);

  bool is_zero() const { return coeffs_.empty(); }
  int lo() const;
  int hi() const;
  int support_width() const { return is_zero() ? 0 : hi() - lo() + 1; }
  /// Coefficient at index n (0 when absent).
  Complex coeff(int n) const;
  const CoeffMap& coeffs() const { return coeffs_; }
  double max_abs() const;

  bool is_analytic() const { return is_zero() || lo() >= 0; }
  /// True when every coefficient has |Im a_n| <= tol * max(1, max|a|).
  bool is_real_type(double tol = kDefaultEqTol) const;

  /// Multiplication by z^k.
  FourierPoly shifted(int k) const;
  /// Restriction of the support to [lo, hi].
  FourierPoly truncated(int lo, int hi) const;
  /// Taylor coefficients 0..degree of an analytic element (throws NonAnalyticError).
  std::vector<Complex> taylor_coeffs(int degree) const;

  FourierPoly operator-() const;
  friend FourierPoly operator+(const FourierPoly& f, const FourierPoly& g);
  friend FourierPoly operator-(const FourierPoly& f, const FourierPoly& g);
  friend FourierPoly operator*(Complex a, const FourierPoly& f);

 private:
  CoeffMap coeffs_;
  void prune(double drop_tol);
};

/// The involution f*(e^{it}) = conj(f(e^{-it})): coefficient-wise conjugation,
/// indices unchanged. Involutive, conjugate-linear, isometric in every norm.
FourierPoly star(const FourierPoly& f);

/// The projection (f + f*)/2 onto real-coefficient elements: coefficient-wise
/// real part. Idempotent, L^2-contractive, and a module map over real-type
/// left factors.
FourierPoly phi(const FourierPoly& f);

/// Coefficient convolution (pointwise product of the boundary functions).
FourierPoly multiply(const FourierPoly& f, const FourierPoly& g);

/// Normalized circle integral of the product f*g (not the Hermitian inner
/// product): sum_n f_n g_{-n}. Satisfies pairing(star(f), g) ==
/// conj(pairing(f, star(g))).
Complex pairing(const FourierPoly& f, const FourierPoly& g);

enum class NormKind { L1, L2, Linf };

/// L2 is exact by Parseval. L1/Linf are grid approximations at a power-of-two
/// grid of at least 4x the support width (grid_size overrides, 0 = automatic).
double norm(const FourierPoly& f, NormKind which, int grid_size = 0);

/// Evaluation sum a_n z^n of an analytic element at |z| < 1.
Complex eval_disk(const FourierPoly& f, Complex z);

/// Boundary evaluation sum a_n e^{i n theta} (any Laurent support).
Complex eval_circle(const FourierPoly& f, double theta);

}  // namespace hardyr
