#include "hardyr/rational.hpp"

#include <cmath>
#include <numbers>

#include "hardyr/errors.hpp"

namespace hardyr {

RationalDiskFunction::RationalDiskFunction()
    : num_(FourierPoly::constant(1.0)), den_(FourierPoly::constant(1.0)) {}

RationalDiskFunction::RationalDiskFunction(FourierPoly num, FourierPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!num_.is_analytic() || !den_.is_analytic())
    throw NonAnalyticError("RationalDiskFunction: num and den must be analytic");
  if (den_.is_zero() || den_.lo() != 0)
    throw Error("RationalDiskFunction: denominator must not vanish at 0");
}

Complex RationalDiskFunction::eval(Complex z) const {
  auto horner = [&z](const FourierPoly& p) {
    if (p.is_zero()) return Complex{0.0, 0.0};
    Complex acc{0.0, 0.0};
    for (int n = p.hi(); n >= 0; --n) acc = acc * z + p.coeff(n);
    return acc;
  };
  return horner(num_) / horner(den_);
}

Complex RationalDiskFunction::eval_circle(double theta) const {
  return eval(std::polar(1.0, theta));
}

GridFunction RationalDiskFunction::on_grid(int grid_size) const {
  GridFunction out;
  out.samples.resize(static_cast<size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k)
    out.samples[static_cast<size_t>(k)] =
        eval_circle(2.0 * std::numbers::pi * k / grid_size);
  return out;
}

FourierPoly RationalDiskFunction::taylor(int degree, double drop_tol) const {
  const auto n = num_.taylor_coeffs(degree);
  const auto d = den_.taylor_coeffs(degree);
  std::vector<Complex> out(static_cast<size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    Complex acc = n[static_cast<size_t>(k)];
    for (int j = 1; j <= k; ++j) acc -= d[static_cast<size_t>(j)] * out[static_cast<size_t>(k - j)];
    out[static_cast<size_t>(k)] = acc / d[0];
  }
  return FourierPoly::from_taylor(out, drop_tol);
}

bool RationalDiskFunction::is_real_type(double tol) const {
  return num_.is_real_type(tol) && den_.is_real_type(tol);
}

bool RationalDiskFunction::is_polynomial(double tol) const {
  return den_.is_zero() || den_.hi() == 0 ||
         den_.truncated(1, den_.hi()).max_abs() <= tol * den_.max_abs();
}

RationalDiskFunction RationalDiskFunction::star() const {
  FourierPoly::CoeffMap n, d;
  for (const auto& [k, a] : num_.coeffs()) n[k] = std::conj(a);
  for (const auto& [k, a] : den_.coeffs()) d[k] = std::conj(a);
  return RationalDiskFunction(FourierPoly(std::move(n), 0.0),
                              FourierPoly(std::move(d), 0.0));
}

RationalDiskFunction multiply(const RationalDiskFunction& f,
                              const RationalDiskFunction& g) {
  return RationalDiskFunction(multiply(f.num_, g.num_), multiply(f.den_, g.den_));
}

}  // namespace hardyr
