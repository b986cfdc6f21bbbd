#include "hardyr/szego.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "hardyr/errors.hpp"
#include "hardyr/grid.hpp"

namespace hardyr {

namespace {

constexpr double kGramCutoff = 1e-12;  // relative eigenvalue cutoff

// Trigonometric moments t_d = (1/M) sum_k w_k e^{i d theta_k}, d = 0..count.
std::vector<Complex> moments(const std::vector<double>& w, int count) {
  const int m = static_cast<int>(w.size());
  std::vector<Complex> t(static_cast<size_t>(count) + 1, Complex{0.0, 0.0});
  for (int k = 0; k < m; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / m;
    const Complex rot = std::polar(1.0, theta);
    Complex e{w[static_cast<size_t>(k)], 0.0};
    for (int d = 0; d <= count; ++d) {
      t[static_cast<size_t>(d)] += e;
      e *= rot;
    }
  }
  for (Complex& v : t) v /= static_cast<double>(m);
  return t;
}

void check_degree(const Weight& w, int degree) {
  if (degree < 1) throw DegreeTooLargeError("szego_infimum_ls: degree must be >= 1");
  if (degree > w.size() / 4)
    throw DegreeTooLargeError("szego_infimum_ls: degree must be <= M/4");
}

// Objective (1/M) sum w |1 - f|^2 for f = sum_{j>=1} c_j z^j.
double objective(const std::vector<double>& w, const Eigen::VectorXcd& c) {
  const int m = static_cast<int>(w.size());
  const int n = static_cast<int>(c.size());
  double acc = 0.0;
  for (int k = 0; k < m; ++k) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
    Complex f{0.0, 0.0};
    for (int j = n - 1; j >= 0; --j) f = (f + c(j)) * z;
    acc += w[static_cast<size_t>(k)] * std::norm(1.0 - f);
  }
  return acc / m;
}

}  // namespace

Weight Weight::create(std::vector<double> samples, double floor,
                      const ToleranceConfig& tol) {
  if (!is_power_of_two(static_cast<int>(samples.size())))
    throw Error("Weight: sample count must be a power of two");
  if (!(floor > 0.0)) throw Error("Weight: floor must be positive");
  double peak = 0.0;
  for (double v : samples) {
    if (v < 0.0) throw Error("Weight: samples must be nonnegative");
    peak = std::max(peak, v);
  }
  // w(theta_k) = w(-theta_k): the sample-level meaning of w = w*.
  const int m = static_cast<int>(samples.size());
  for (int k = 1; k < m; ++k)
    if (std::abs(samples[static_cast<size_t>(k)] - samples[static_cast<size_t>(m - k)]) >
        tol.eq_tol * std::max(1.0, peak))
      throw Error("Weight: samples must satisfy w(theta) = w(-theta)");
  Weight w;
  w.samples_ = std::move(samples);
  w.floor_ = floor;
  return w;
}

double geometric_mean(const Weight& w) {
  double acc = 0.0;
  for (double v : w.samples()) {
    if (v < w.floor()) return 0.0;
    acc += std::log(v);
  }
  return std::exp(acc / static_cast<double>(w.size()));
}

double szego_infimum_ls(const Weight& w, int degree) {
  check_degree(w, degree);
  const std::vector<Complex> t = moments(w.samples(), degree);
  // Real normal equations: G c = b with G_{jk} = Re t_{j-k}, b_j = Re t_j,
  // j,k = 1..degree.
  Eigen::MatrixXd gram(degree, degree);
  Eigen::VectorXd rhs(degree);
  for (int j = 1; j <= degree; ++j) {
    rhs(j - 1) = t[static_cast<size_t>(j)].real();
    for (int k = 1; k <= degree; ++k)
      gram(j - 1, k - 1) = t[static_cast<size_t>(std::abs(j - k))].real();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  const double cut = kGramCutoff * std::max(1e-300, solver.eigenvalues().maxCoeff());
  Eigen::VectorXd proj = solver.eigenvectors().transpose() * rhs;
  for (int i = 0; i < degree; ++i)
    proj(i) = solver.eigenvalues()(i) > cut ? proj(i) / solver.eigenvalues()(i) : 0.0;
  const Eigen::VectorXd c = solver.eigenvectors() * proj;
  return objective(w.samples(), c.cast<Complex>());
}

double szego_infimum_ls_complex(const Weight& w, int degree) {
  check_degree(w, degree);
  const std::vector<Complex> t = moments(w.samples(), 2 * degree);
  // Hermitian normal equations: G_{jk} = t_{k-j}, b_j = conj(t_j).
  Eigen::MatrixXcd gram(degree, degree);
  Eigen::VectorXcd rhs(degree);
  for (int j = 1; j <= degree; ++j) {
    rhs(j - 1) = std::conj(t[static_cast<size_t>(j)]);
    for (int k = 1; k <= degree; ++k) {
      const int d = k - j;
      gram(j - 1, k - 1) =
          d >= 0 ? t[static_cast<size_t>(d)] : std::conj(t[static_cast<size_t>(-d)]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
  const double cut = kGramCutoff * std::max(1e-300, solver.eigenvalues().maxCoeff());
  Eigen::VectorXcd proj = solver.eigenvectors().adjoint() * rhs;
  for (int i = 0; i < degree; ++i)
    proj(i) = solver.eigenvalues()(i) > cut ? proj(i) / solver.eigenvalues()(i)
                                            : Complex{0.0, 0.0};
  const Eigen::VectorXcd c = solver.eigenvectors() * proj;
  return objective(w.samples(), c);
}

}  // namespace hardyr
