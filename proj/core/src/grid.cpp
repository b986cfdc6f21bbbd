#include "hardyr/grid.hpp"

#include <cmath>
#include <numbers>

#include "hardyr/errors.hpp"

namespace hardyr {

bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

namespace detail {

void fft(std::vector<Complex>& x, int sign) {
  const size_t n = x.size();
  if (n <= 1) return;
  // bit reversal
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const Complex wl = std::polar(1.0, ang);
    for (size_t i = 0; i < n; i += len) {
      Complex w{1.0, 0.0};
      for (size_t k = 0; k < len / 2; ++k) {
        const Complex u = x[i + k];
        const Complex v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

}  // namespace detail

GridFunction to_grid(const FourierPoly& f, int grid_size) {
  if (!is_power_of_two(grid_size))
    throw AliasingError("to_grid: grid size must be a power of two");
  if (!f.is_zero() && grid_size < 2 * (f.hi() - f.lo()) + 2)
    throw AliasingError("to_grid: grid size below the anti-aliasing bound");
  std::vector<Complex> dense(static_cast<size_t>(grid_size), Complex{0.0, 0.0});
  for (const auto& [n, a] : f.coeffs()) {
    const int m = ((n % grid_size) + grid_size) % grid_size;
    dense[static_cast<size_t>(m)] += a;
  }
  detail::fft(dense, +1);  // samples[k] = sum_m c_m e^{+2 pi i k m / M}
  return GridFunction{std::move(dense)};
}

FourierPoly from_grid(const GridFunction& g, int lo, int hi, double drop_tol) {
  const int m = g.size();
  if (!is_power_of_two(m))
    throw AliasingError("from_grid: grid size must be a power of two");
  if (hi < lo) throw Error("from_grid: hi < lo");
  if (m < 2 * (hi - lo) + 2)
    throw AliasingError("from_grid: grid size below the anti-aliasing bound");
  std::vector<Complex> work = g.samples;
  detail::fft(work, -1);
  FourierPoly::CoeffMap coeffs;
  for (int n = lo; n <= hi; ++n) {
    const int idx = ((n % m) + m) % m;
    coeffs[n] = work[static_cast<size_t>(idx)] / static_cast<double>(m);
  }
  return FourierPoly(std::move(coeffs), drop_tol);
}

}  // namespace hardyr
