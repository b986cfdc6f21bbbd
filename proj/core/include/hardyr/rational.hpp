#pragma once

#include "hardyr/fourier_poly.hpp"
#include "hardyr/grid.hpp"

namespace hardyr {

/// Quotient of two analytic polynomials with the denominator nonvanishing on
/// the closed disk (den(0) != 0 is validated; the rest is the producer's
/// contract). Carrier for Blaschke products and rational interpolants.
class RationalDiskFunction {
 public:
  /// The constant function 1.
  RationalDiskFunction();
  RationalDiskFunction(FourierPoly num, FourierPoly den);

  const FourierPoly& num() const { return num_; }
  const FourierPoly& den() const { return den_; }

  Complex eval(Complex z) const;
  Complex eval_circle(double theta) const;
  GridFunction on_grid(int grid_size) const;

  /// Taylor coefficients 0..degree by series division.
  FourierPoly taylor(int degree, double drop_tol = kDefaultDropTol) const;

  bool is_real_type(double tol = kDefaultEqTol) const;
  /// True when the denominator is a constant.
  bool is_polynomial(double tol = kDefaultEqTol) const;

  /// Coefficient-wise conjugation of num and den; equals f* on the circle.
  RationalDiskFunction star() const;

  friend RationalDiskFunction multiply(const RationalDiskFunction& f,
                                       const RationalDiskFunction& g);

 private:
  FourierPoly num_, den_;
};

}  // namespace hardyr
