// Shared test support: independent oracles (naive DFT, trapezoid quadrature,
// row reduction) and seeded random data generators. Oracles here must stay
// independent of the library code paths they check.
#pragma once

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hardyr/fourier_poly.hpp"
#include "hardyr/grid.hpp"

namespace testsup {

using hardyr::Complex;
using hardyr::FourierPoly;

inline constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// oracles

/// O(M^2) discrete Fourier transform, sign as in the library convention.
inline std::vector<Complex> naive_dft(const std::vector<Complex>& x, int sign) {
  const int m = static_cast<int>(x.size());
  std::vector<Complex> out(x.size());
  for (int k = 0; k < m; ++k) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j < m; ++j)
      acc += x[static_cast<size_t>(j)] *
             std::polar(1.0, sign * 2.0 * kPi * k * j / m);
    out[static_cast<size_t>(k)] = acc;
  }
  return out;
}

/// Trapezoid (= rectangle, periodic) quadrature of f*g over the circle,
/// normalized; pointwise evaluation, no FFT involved.
inline Complex quadrature_pairing(const FourierPoly& f, const FourierPoly& g, int m) {
  Complex acc{0.0, 0.0};
  for (int k = 0; k < m; ++k) {
    const double theta = 2.0 * kPi * k / m;
    acc += hardyr::eval_circle(f, theta) * hardyr::eval_circle(g, theta);
  }
  return acc / static_cast<double>(m);
}

/// Normalized quadrature of |f| over the circle.
inline double quadrature_l1(const FourierPoly& f, int m) {
  double acc = 0.0;
  for (int k = 0; k < m; ++k)
    acc += std::abs(hardyr::eval_circle(f, 2.0 * kPi * k / m));
  return acc / m;
}

/// Row-reduction rank of a set of real coefficient rows (Gaussian elimination
/// with partial pivoting); membership test via rank comparison.
class RowReducer {
 public:
  explicit RowReducer(int cols) : cols_(cols) {}

  void add(const std::vector<double>& row) {
    std::vector<double> r = row;
    r.resize(static_cast<size_t>(cols_), 0.0);
    reduce(r);
    if (!is_zero(r)) rows_.push_back(std::move(r));
  }

  void add(const FourierPoly& f) {
    std::vector<double> row(static_cast<size_t>(cols_), 0.0);
    for (const auto& [n, a] : f.coeffs())
      if (n >= 0 && n < cols_) row[static_cast<size_t>(n)] = a.real();
    add(row);
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  bool contains(const FourierPoly& f) const {
    std::vector<double> row(static_cast<size_t>(cols_), 0.0);
    double peak = 0.0;
    for (const auto& [n, a] : f.coeffs()) {
      if (n >= 0 && n < cols_) row[static_cast<size_t>(n)] = a.real();
      peak = std::max(peak, std::abs(a));
    }
    reduce(row);
    for (double v : row)
      if (std::abs(v) > 1e-8 * std::max(1.0, peak)) return false;
    return true;
  }

 private:
  void reduce(std::vector<double>& r) const {
    for (const auto& pivot_row : rows_) {
      const int p = pivot_col(pivot_row);
      if (p < 0) continue;
      const double factor = r[static_cast<size_t>(p)] / pivot_row[static_cast<size_t>(p)];
      if (factor == 0.0) continue;
      for (int j = 0; j < cols_; ++j)
        r[static_cast<size_t>(j)] -= factor * pivot_row[static_cast<size_t>(j)];
    }
  }
  static int pivot_col(const std::vector<double>& r) {
    double best = 0.0;
    int idx = -1;
    for (size_t j = 0; j < r.size(); ++j)
      if (std::abs(r[j]) > best) {
        best = std::abs(r[j]);
        idx = static_cast<int>(j);
      }
    return best > 1e-10 ? idx : -1;
  }
  static bool is_zero(const std::vector<double>& r) {
    for (double v : r)
      if (std::abs(v) > 1e-10) return false;
    return true;
  }

  int cols_;
  std::vector<std::vector<double>> rows_;
};

// ---------------------------------------------------------------------------
// random data

/// Coefficients uniform in the complex unit square, indices lo..lo+degree.
inline FourierPoly random_poly(std::mt19937& rng, int degree, int lo = 0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierPoly::CoeffMap m;
  for (int n = lo; n <= lo + degree; ++n) m[n] = Complex{u(rng), u(rng)};
  return FourierPoly(std::move(m));
}

inline FourierPoly random_real_poly(std::mt19937& rng, int degree, int lo = 0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierPoly::CoeffMap m;
  for (int n = lo; n <= lo + degree; ++n) m[n] = Complex{u(rng), 0.0};
  return FourierPoly(std::move(m));
}

/// Monic polynomial expanded from prescribed roots.
inline FourierPoly poly_from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> p{Complex{1.0, 0.0}};
  for (const Complex r : roots) {
    std::vector<Complex> out(p.size() + 1, Complex{0.0, 0.0});
    for (size_t i = 0; i < p.size(); ++i) {
      out[i] += p[i] * (-r);
      out[i + 1] += p[i];
    }
    p = std::move(out);
  }
  return FourierPoly::from_taylor(p);
}

/// Roots at radius <= rin or >= rout, conjugate-paired when real_type.
inline std::vector<Complex> random_split_roots(std::mt19937& rng, int count,
                                               bool real_type, double rin = 0.9,
                                               double rout = 1.1) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  std::vector<Complex> roots;
  while (static_cast<int>(roots.size()) < count) {
    const bool inside = u01(rng) < 0.5;
    const double radius = inside ? 0.1 + (rin - 0.1) * u01(rng)
                                 : rout + 0.8 * u01(rng);
    if (real_type && count - static_cast<int>(roots.size()) >= 2 && u01(rng) < 0.6) {
      const Complex z = std::polar(radius, angle(rng));
      roots.push_back(z);
      roots.push_back(std::conj(z));
    } else {
      const double s = u01(rng) < 0.5 ? -1.0 : 1.0;
      if (real_type)
        roots.push_back(Complex{s * radius, 0.0});
      else
        roots.push_back(std::polar(radius, 2.0 * angle(rng)));
    }
  }
  return roots;
}

}  // namespace testsup
