#include "hardyr/fourier_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardyr/errors.hpp"
#include "hardyr/grid.hpp"

namespace hardyr {

FourierPoly::FourierPoly(CoeffMap coeffs, double drop_tol)
    : coeffs_(std::move(coeffs)) {
  prune(drop_tol);
}

void FourierPoly::prune(double drop_tol) {
  double peak = 0.0;
  for (const auto& [n, a] : coeffs_) peak = std::max(peak, std::abs(a));
  const double cut = peak * drop_tol;
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (std::abs(it->second) <= cut)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

FourierPoly FourierPoly::constant(Complex a) { return monomial(0, a); }

FourierPoly FourierPoly::monomial(int n, Complex a) {
  CoeffMap m;
  if (a != Complex{0.0, 0.0}) m[n] = a;
  FourierPoly f;
  f.coeffs_ = std::move(m);
  return f;
}

FourierPoly FourierPoly::from_taylor(std::span<const Complex> a, double drop_tol) {
  CoeffMap m;
  for (int n = 0; n < static_cast<int>(a.size()); ++n)
    if (a[n] != Complex{0.0, 0.0}) m[n] = a[n];
  return FourierPoly(std::move(m), drop_tol);
}

FourierPoly FourierPoly::from_taylor(std::span<const double> a, double drop_tol) {
  CoeffMap m;
  for (int n = 0; n < static_cast<int>(a.size()); ++n)
    if (a[n] != 0.0) m[n] = Complex{a[n], 0.0};
  return FourierPoly(std::move(m), drop_tol);
}

int FourierPoly::lo() const {
  if (is_zero()) throw Error("FourierPoly::lo: undefined for the zero element");
  return coeffs_.begin()->first;
}

int FourierPoly::hi() const {
  if (is_zero()) throw Error("FourierPoly::hi: undefined for the zero element");
  return coeffs_.rbegin()->first;
}

Complex FourierPoly::coeff(int n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

double FourierPoly::max_abs() const {
  double peak = 0.0;
  for (const auto& [n, a] : coeffs_) peak = std::max(peak, std::abs(a));
  return peak;
}

bool FourierPoly::is_real_type(double tol) const {
  const double cut = tol * std::max(1.0, max_abs());
  for (const auto& [n, a] : coeffs_)
    if (std::abs(a.imag()) > cut) return false;
  return true;
}

FourierPoly FourierPoly::shifted(int k) const {
  CoeffMap m;
  for (const auto& [n, a] : coeffs_) m[n + k] = a;
  FourierPoly f;
  f.coeffs_ = std::move(m);
  return f;
}

FourierPoly FourierPoly::truncated(int lo, int hi) const {
  CoeffMap m;
  for (const auto& [n, a] : coeffs_)
    if (n >= lo && n <= hi) m[n] = a;
  FourierPoly f;
  f.coeffs_ = std::move(m);
  return f;
}

std::vector<Complex> FourierPoly::taylor_coeffs(int degree) const {
  if (!is_analytic())
    throw NonAnalyticError("taylor_coeffs: element has negative-index coefficients");
  std::vector<Complex> out(static_cast<size_t>(degree) + 1, Complex{0.0, 0.0});
  for (const auto& [n, a] : coeffs_)
    if (n <= degree) out[static_cast<size_t>(n)] = a;
  return out;
}

FourierPoly FourierPoly::operator-() const {
  CoeffMap m;
  for (const auto& [n, a] : coeffs_) m[n] = -a;
  FourierPoly f;
  f.coeffs_ = std::move(m);
  return f;
}

FourierPoly operator+(const FourierPoly& f, const FourierPoly& g) {
  FourierPoly::CoeffMap m = f.coeffs_;
  for (const auto& [n, a] : g.coeffs_) m[n] += a;
  return FourierPoly(std::move(m));
}

FourierPoly operator-(const FourierPoly& f, const FourierPoly& g) {
  FourierPoly::CoeffMap m = f.coeffs_;
  for (const auto& [n, a] : g.coeffs_) m[n] -= a;
  return FourierPoly(std::move(m));
}

FourierPoly operator*(Complex a, const FourierPoly& f) {
  FourierPoly::CoeffMap m;
  for (const auto& [n, c] : f.coeffs_) m[n] = a * c;
  return FourierPoly(std::move(m));
}

FourierPoly star(const FourierPoly& f) {
  FourierPoly::CoeffMap m;
  for (const auto& [n, a] : f.coeffs()) m[n] = std::conj(a);
  return FourierPoly(std::move(m), 0.0);
}

FourierPoly phi(const FourierPoly& f) {
  FourierPoly::CoeffMap m;
  for (const auto& [n, a] : f.coeffs()) m[n] = Complex{a.real(), 0.0};
  return FourierPoly(std::move(m));
}

FourierPoly multiply(const FourierPoly& f, const FourierPoly& g) {
  if (f.is_zero() || g.is_zero()) return FourierPoly{};
  FourierPoly::CoeffMap m;
  for (const auto& [n, a] : f.coeffs())
    for (const auto& [k, b] : g.coeffs()) m[n + k] += a * b;
  return FourierPoly(std::move(m));
}

Complex pairing(const FourierPoly& f, const FourierPoly& g) {
  // (1/2pi) int f g = sum_n f_n g_{-n}; iterate over the smaller support.
  const FourierPoly& small = f.coeffs().size() <= g.coeffs().size() ? f : g;
  const FourierPoly& large = &small == &f ? g : f;
  Complex acc{0.0, 0.0};
  for (const auto& [n, a] : small.coeffs()) acc += a * large.coeff(-n);
  return acc;
}

namespace {

int norm_grid_size(const FourierPoly& f, int grid_size) {
  if (grid_size != 0) return grid_size;
  int m = 16;
  const int want = 4 * std::max(1, f.support_width());
  while (m < want) m *= 2;
  return m;
}

}  // namespace

double norm(const FourierPoly& f, NormKind which, int grid_size) {
  if (f.is_zero()) return 0.0;
  if (which == NormKind::L2) {
    double acc = 0.0;
    for (const auto& [n, a] : f.coeffs()) acc += std::norm(a);
    return std::sqrt(acc);
  }
  const GridFunction g = to_grid(f, norm_grid_size(f, grid_size));
  if (which == NormKind::Linf) {
    double peak = 0.0;
    for (const Complex& v : g.samples) peak = std::max(peak, std::abs(v));
    return peak;
  }
  double acc = 0.0;
  for (const Complex& v : g.samples) acc += std::abs(v);
  return acc / static_cast<double>(g.size());
}

Complex eval_disk(const FourierPoly& f, Complex z) {
  if (f.is_zero()) return {0.0, 0.0};
  if (!f.is_analytic())
    throw NonAnalyticError("eval_disk: element has negative-index coefficients");
  if (std::abs(z) >= 1.0)
    throw OutsideDiskError("eval_disk: |z| >= 1");
  // Horner over the dense range 0..hi.
  Complex acc{0.0, 0.0};
  for (int n = f.hi(); n >= 0; --n) acc = acc * z + f.coeff(n);
  return acc;
}

Complex eval_circle(const FourierPoly& f, double theta) {
  Complex acc{0.0, 0.0};
  for (const auto& [n, a] : f.coeffs())
    acc += a * std::polar(1.0, static_cast<double>(n) * theta);
  return acc;
}

}  // namespace hardyr
