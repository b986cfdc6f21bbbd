#include "hardyr/factorization.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardyr/errors.hpp"

namespace hardyr {

namespace {

constexpr double kZeroBoundaryEps = 1e-8;

// Ascending-coefficient product accumulation: p *= (c0 + c1 z).
void mul_linear(std::vector<Complex>& p, Complex c0, Complex c1) {
  std::vector<Complex> out(p.size() + 1, Complex{0.0, 0.0});
  for (size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i] * c0;
    out[i + 1] += p[i] * c1;
  }
  p = std::move(out);
}

FourierPoly poly_from(const std::vector<Complex>& ascending, double drop_tol) {
  return FourierPoly::from_taylor(ascending, drop_tol);
}

}  // namespace

std::vector<Complex> polynomial_roots(const FourierPoly& f) {
  if (f.is_zero()) throw ZeroPolynomialError("polynomial_roots: zero input");
  if (!f.is_analytic())
    throw NonAnalyticError("polynomial_roots: input must be analytic");
  const int lo = f.lo();
  const int deg = f.hi() - lo;
  if (deg == 0) return {};
  // Monic-normalized companion matrix of f / z^lo.
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  const Complex lead = f.coeff(f.hi());
  for (int i = 0; i < deg; ++i) {
    if (i + 1 < deg) companion(i + 1, i) = 1.0;
    companion(i, deg - 1) = -f.coeff(lo + i) / lead;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> roots(static_cast<size_t>(deg));
  for (int i = 0; i < deg; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);
  // Deterministic order: by modulus, then argument.
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  return roots;
}

RationalDiskFunction blaschke_product(std::span<const Complex> zeros,
                                      int origin_order) {
  if (origin_order < 0)
    throw Error("blaschke_product: origin_order must be nonnegative");
  std::vector<Complex> num{Complex{1.0, 0.0}};
  std::vector<Complex> den{Complex{1.0, 0.0}};
  for (const Complex a : zeros) {
    const double r = std::abs(a);
    if (r >= 1.0 - kZeroBoundaryEps)
      throw ZeroOnBoundaryError("blaschke_product: zero too close to the circle");
    // (|a|/a)(a - z) / (1 - conj(a) z); b(0) = |a| > 0.
    const Complex c = Complex{r, 0.0} / a;
    mul_linear(num, c * a, -c);
    mul_linear(den, Complex{1.0, 0.0}, -std::conj(a));
  }
  FourierPoly n = poly_from(num, kDefaultDropTol).shifted(origin_order);
  return RationalDiskFunction(std::move(n), poly_from(den, kDefaultDropTol));
}

FourierPoly conjugate_function(const FourierPoly& f) {
  FourierPoly::CoeffMap m;
  for (const auto& [n, a] : f.coeffs()) {
    if (n == 0) continue;
    const Complex mult = n > 0 ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
    m[n] = mult * a;
  }
  return FourierPoly(std::move(m), 0.0);
}

FourierPoly outer_from_modulus(const GridFunction& modulus, int degree) {
  constexpr double kModulusFloor = 1e-10;
  const int m = modulus.size();
  if (!is_power_of_two(m))
    throw AliasingError("outer_from_modulus: grid size must be a power of two");
  if (degree < 0 || degree > m / 2 - 1)
    throw DegreeTooLargeError("outer_from_modulus: degree must be <= M/2 - 1");
  std::vector<Complex> logm(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    const Complex v = modulus.samples[static_cast<size_t>(k)];
    if (!(v.real() >= kModulusFloor) || std::abs(v.imag()) > kModulusFloor)
      throw NonpositiveModulusError("outer_from_modulus: samples must be real >= 1e-10");
    logm[static_cast<size_t>(k)] = Complex{std::log(v.real()), 0.0};
  }
  detail::fft(logm, -1);
  // Analytic completion h = c_0 + 2 sum_{n>=1} c_n z^n, then u = exp(h) via
  // the series recurrence u' = h' u.
  std::vector<Complex> h(static_cast<size_t>(degree) + 1);
  h[0] = logm[0] / static_cast<double>(m);
  for (int n = 1; n <= degree; ++n)
    h[static_cast<size_t>(n)] = 2.0 * logm[static_cast<size_t>(n)] / static_cast<double>(m);
  std::vector<Complex> u(static_cast<size_t>(degree) + 1, Complex{0.0, 0.0});
  u[0] = std::exp(h[0]);
  for (int k = 1; k <= degree; ++k) {
    Complex acc{0.0, 0.0};
    for (int j = 1; j <= k; ++j)
      acc += static_cast<double>(j) * h[static_cast<size_t>(j)] * u[static_cast<size_t>(k - j)];
    u[static_cast<size_t>(k)] = acc / static_cast<double>(k);
  }
  return FourierPoly::from_taylor(u);
}

FactorizationResult inner_outer(const FourierPoly& f,
                                const InnerOuterOptions& options) {
  if (f.is_zero()) throw ZeroPolynomialError("inner_outer: zero input");
  if (!f.is_analytic())
    throw NonAnalyticError("inner_outer: input must be analytic");
  const double eps = options.boundary_eps;
  const int origin_order = f.lo();
  const Complex lead = f.coeff(f.hi());

  std::vector<Complex> inside, outside;
  for (const Complex root : polynomial_roots(f)) {
    if (std::abs(root) <= 1.0 - eps)
      inside.push_back(root);
    else
      outside.push_back(root);  // boundary ring and beyond both go outer
  }

  RationalDiskFunction inner = blaschke_product(inside, origin_order);

  // Exact polynomial outer part: f / inner expands to
  // lead * prod_in [-(a/|a|)(1 - conj(a) z)] * prod_out (z - b).
  std::vector<Complex> u{lead};
  for (const Complex a : inside) {
    const Complex c = -a / std::abs(a);
    mul_linear(u, c, -c * std::conj(a));
  }
  for (const Complex b : outside) mul_linear(u, -b, Complex{1.0, 0.0});
  FourierPoly outer = poly_from(u, options.tol.drop_tol);

  int sign = 1;
  if (f.is_real_type(options.tol.eq_tol)) {
    // Canonical representative: both factors with positive lowest coefficient;
    // sign restores f. The inner factor is already canonical by construction.
    const Complex low = outer.coeff(outer.lo());
    if (low.real() < 0.0) {
      outer = -outer;
      sign = -1;
    }
  }

  // L2 reconstruction error on an anti-aliased grid.
  int grid = options.residual_grid;
  if (grid == 0) {
    grid = 16;
    while (grid < 4 * (f.support_width() + 1)) grid *= 2;
  }
  double acc = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / grid;
    const Complex lhs = eval_circle(f, theta);
    const Complex rhs = static_cast<double>(sign) * inner.eval_circle(theta) *
                        eval_circle(outer, theta);
    acc += std::norm(lhs - rhs);
  }
  FactorizationResult result{std::move(inner), std::move(outer), sign,
                             std::sqrt(acc / grid)};
  return result;
}

RieszFactorization riesz_factorize(const FourierPoly& f,
                                   const RieszOptions& options) {
  if (f.is_zero()) throw ZeroPolynomialError("riesz_factorize: zero input");
  if (!f.is_analytic())
    throw NonAnalyticError("riesz_factorize: input must be analytic");
  if (!f.is_real_type(options.inner_outer.tol.eq_tol))
    throw Error("riesz_factorize: input must be real-type");

  const FactorizationResult io = inner_outer(f, options.inner_outer);

  GridFunction sqrt_mod;
  sqrt_mod.samples.resize(static_cast<size_t>(options.grid_size));
  for (int k = 0; k < options.grid_size; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / options.grid_size;
    sqrt_mod.samples[static_cast<size_t>(k)] =
        Complex{std::sqrt(std::abs(eval_circle(f, theta))), 0.0};
  }
  const FourierPoly g = outer_from_modulus(sqrt_mod, options.outer_degree);

  // f1 carries the paper's (un-canonicalized) inner factor sign*inner, so
  // that multiply(f1, f2) reconstructs f itself.
  const FourierPoly inner_taylor = io.inner.taylor(options.result_degree);
  FourierPoly f1 = multiply(static_cast<Complex>(io.sign) * inner_taylor, g)
                       .truncated(0, options.result_degree);
  return RieszFactorization{phi(f1), phi(g)};
}

}  // namespace hardyr
