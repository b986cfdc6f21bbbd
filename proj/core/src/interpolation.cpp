#include "hardyr/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardyr/errors.hpp"

namespace hardyr {

namespace {

constexpr double kDegenerateTol = 1e-8;  // Schur parameter on the unit circle

std::vector<Complex> conv(const std::vector<Complex>& a,
                          const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Complex> conj_coeffs(const std::vector<Complex>& a) {
  std::vector<Complex> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::conj(a[i]);
  return out;
}

// First `count` coefficients of the series num/den.
std::vector<Complex> series_div(const std::vector<Complex>& num,
                                const std::vector<Complex>& den, size_t count) {
  std::vector<Complex> out(count, Complex{0.0, 0.0});
  for (size_t k = 0; k < count; ++k) {
    Complex acc = k < num.size() ? num[k] : Complex{0.0, 0.0};
    for (size_t j = 1; j <= k && j < den.size(); ++j) acc -= den[j] * out[k - j];
    out[k] = acc / den[0];
  }
  return out;
}

Eigen::MatrixXcd pick_matrix_raw(std::span<const Complex> nodes,
                                 std::span<const Complex> values) {
  const int n = static_cast<int>(nodes.size());
  Eigen::MatrixXcd p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p(i, j) = (1.0 - values[static_cast<size_t>(i)] * std::conj(values[static_cast<size_t>(j)])) /
                (1.0 - nodes[static_cast<size_t>(i)] * std::conj(nodes[static_cast<size_t>(j)]));
  return p;
}

double min_eigenvalue_hermitian(const Eigen::MatrixXcd& p, double* scale) {
  const Eigen::MatrixXcd sym = 0.5 * (p + p.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (scale) *scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  return solver.eigenvalues().minCoeff();
}

// One Nevanlinna step per node; returns the interpolant as ascending
// numerator/denominator coefficients. Assumes the Pick certificate held.
std::pair<std::vector<Complex>, std::vector<Complex>> nevanlinna_recursion(
    std::vector<Complex> nodes, std::vector<Complex> values) {
  const size_t n = nodes.size();
  const Complex z1 = nodes[0];
  const Complex w1 = values[0];
  if (std::abs(w1) > 1.0 + kDegenerateTol)
    throw NotSolvableError("np_solve: target outside the closed disk");
  if (n == 1) return {{w1}, {Complex{1.0, 0.0}}};
  if (std::abs(w1) >= 1.0 - kDegenerateTol) {
    // Unimodular Schur parameter: the solution is forced to the constant w1.
    for (size_t j = 1; j < n; ++j)
      if (std::abs(values[j] - w1) > 1e-6)
        throw NotSolvableError("np_solve: degenerate step with inconsistent targets");
    return {{w1}, {Complex{1.0, 0.0}}};
  }
  std::vector<Complex> sub_nodes(nodes.begin() + 1, nodes.end());
  std::vector<Complex> sub_values(n - 1);
  for (size_t j = 1; j < n; ++j) {
    const Complex z = nodes[j];
    const Complex b = (z - z1) / (1.0 - std::conj(z1) * z);
    sub_values[j - 1] = (values[j] - w1) / (1.0 - std::conj(w1) * values[j]) / b;
  }
  auto [p, q] = nevanlinna_recursion(std::move(sub_nodes), std::move(sub_values));
  // f = (w1 d q + b p) / (d q + conj(w1) b p), b = z - z1, d = 1 - conj(z1) z.
  const std::vector<Complex> beta{-z1, Complex{1.0, 0.0}};
  const std::vector<Complex> delta{Complex{1.0, 0.0}, -std::conj(z1)};
  const std::vector<Complex> dq = conv(delta, q);
  const std::vector<Complex> bp = conv(beta, p);
  std::vector<Complex> num(dq.size()), den(dq.size());
  for (size_t i = 0; i < dq.size(); ++i) {
    num[i] = w1 * dq[i] + bp[i];
    den[i] = dq[i] + std::conj(w1) * bp[i];
  }
  return {std::move(num), std::move(den)};
}

void zero_imag(std::vector<Complex>& a) {
  for (Complex& c : a) c = Complex{c.real(), 0.0};
}

bool all_real(std::span<const Complex> a, double tol) {
  double peak = 0.0;
  for (const Complex& c : a) peak = std::max(peak, std::abs(c));
  const double cut = tol * std::max(1.0, peak);
  for (const Complex& c : a)
    if (std::abs(c.imag()) > cut) return false;
  return true;
}

}  // namespace

InterpolationProblem InterpolationProblem::create(std::span<const Complex> nodes,
                                                  std::span<const Complex> values,
                                                  const ToleranceConfig& tol) {
  if (nodes.size() != values.size())
    throw Error("InterpolationProblem: node/value count mismatch");
  if (nodes.empty()) throw Error("InterpolationProblem: empty problem");
  for (const Complex z : nodes)
    if (std::abs(z) >= 1.0 - kBoundaryEps)
      throw NodeOnBoundaryError("InterpolationProblem: node too close to the circle");
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (std::abs(nodes[i] - nodes[j]) <= kMinNodeGap)
        throw DuplicateNodesError("InterpolationProblem: nodes not distinct");
  InterpolationProblem p;
  p.nodes_.assign(nodes.begin(), nodes.end());
  p.values_.assign(values.begin(), values.end());
  p.derive(tol);
  return p;
}

InterpolationProblem InterpolationProblem::unchecked(std::vector<Complex> nodes,
                                                     std::vector<Complex> values,
                                                     const ToleranceConfig& tol) {
  InterpolationProblem p;
  p.nodes_ = std::move(nodes);
  p.values_ = std::move(values);
  p.derive(tol);
  return p;
}

void InterpolationProblem::derive(const ToleranceConfig& tol) {
  const int n = size();
  auto is_real = [&tol](Complex v) { return std::abs(v.imag()) <= tol.eq_tol; };
  // Real nodes first, the real-valued ones leading; stable within each class.
  perm_.resize(static_cast<size_t>(n));
  std::vector<int> real_real, real_complex, rest;
  for (int j = 0; j < n; ++j) {
    const size_t k = static_cast<size_t>(j);
    if (is_real(nodes_[k]))
      (is_real(values_[k]) ? real_real : real_complex).push_back(j);
    else
      rest.push_back(j);
  }
  s_ = static_cast<int>(real_real.size());
  r_ = s_ + static_cast<int>(real_complex.size());
  size_t pos = 0;
  for (int j : real_real) perm_[pos++] = j;
  for (int j : real_complex) perm_[pos++] = j;
  for (int j : rest) perm_[pos++] = j;
}

Eigen::MatrixXcd pick_matrix(std::span<const Complex> nodes,
                             std::span<const Complex> values) {
  if (nodes.size() != values.size())
    throw Error("pick_matrix: node/value count mismatch");
  for (const Complex z : nodes)
    if (std::abs(z) >= 1.0 - InterpolationProblem::kBoundaryEps)
      throw NodeOnBoundaryError("pick_matrix: node too close to the circle");
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (std::abs(nodes[i] - nodes[j]) <= InterpolationProblem::kMinNodeGap)
        throw DuplicateNodesError("pick_matrix: nodes not distinct");
  return pick_matrix_raw(nodes, values);
}

InterpolationProblem augment_real(const InterpolationProblem& problem) {
  const int n = problem.size();
  const int r = problem.real_node_count();
  const int s = problem.real_pair_count();
  const auto& perm = problem.permutation();
  std::vector<Complex> nodes, values;
  nodes.reserve(static_cast<size_t>(2 * n - s));
  values.reserve(static_cast<size_t>(2 * n - s));
  for (int j = 0; j < n; ++j) {
    nodes.push_back(problem.nodes()[static_cast<size_t>(perm[static_cast<size_t>(j)])]);
    values.push_back(problem.values()[static_cast<size_t>(perm[static_cast<size_t>(j)])]);
  }
  // z_{s+1..r} duplicated verbatim, then the conjugates of the non-real nodes;
  // values extended by conj(w_{s+1..n}).
  for (int j = s; j < r; ++j) nodes.push_back(nodes[static_cast<size_t>(j)]);
  for (int j = r; j < n; ++j) nodes.push_back(std::conj(nodes[static_cast<size_t>(j)]));
  for (int j = s; j < n; ++j) values.push_back(std::conj(values[static_cast<size_t>(j)]));
  return InterpolationProblem::unchecked(std::move(nodes), std::move(values));
}

PickReport np_solvable_real(const InterpolationProblem& problem,
                            const ToleranceConfig& tol) {
  const InterpolationProblem aug = augment_real(problem);
  PickReport report;
  report.matrix = pick_matrix_raw(aug.nodes(), aug.values());
  double scale = 1.0;
  report.min_eigenvalue = min_eigenvalue_hermitian(report.matrix, &scale);
  report.solvable = report.min_eigenvalue >= -tol.psd_tol * scale;
  for (int j = 0; j < problem.size(); ++j) {
    const size_t k = static_cast<size_t>(j);
    if (std::abs(problem.nodes()[k].imag()) <= tol.eq_tol &&
        std::abs(problem.values()[k].imag()) > tol.eq_tol)
      report.forced_real_violations.push_back(j);
  }
  return report;
}

NPSolution np_solve(std::span<const Complex> nodes,
                    std::span<const Complex> values,
                    const ToleranceConfig& tol) {
  InterpolationProblem::create(nodes, values, tol);  // validation only
  double scale = 1.0;
  const double min_eig =
      min_eigenvalue_hermitian(pick_matrix_raw(nodes, values), &scale);
  if (min_eig < -tol.psd_tol * scale)
    throw NotSolvableError("np_solve: Pick matrix is not positive semidefinite");
  auto [num, den] = nevanlinna_recursion(
      std::vector<Complex>(nodes.begin(), nodes.end()),
      std::vector<Complex>(values.begin(), values.end()));
  RationalDiskFunction rational(FourierPoly::from_taylor(num),
                                FourierPoly::from_taylor(den));
  FourierPoly taylor = rational.taylor(kInterpolantTaylorDegree);
  return NPSolution{std::move(rational), std::move(taylor)};
}

NPRealSolution np_solve_real(const InterpolationProblem& problem,
                             const ToleranceConfig& tol) {
  const PickReport report = np_solvable_real(problem, tol);
  if (!report.solvable)
    throw NotSolvableError("np_solve_real: augmented Pick matrix is not PSD");

  // The recursion runs on the de-duplicated consistent system; the deliberate
  // duplicates only exist to force real targets through the matrix test.
  const InterpolationProblem aug = augment_real(problem);
  std::vector<Complex> nodes, values;
  for (int j = 0; j < aug.size(); ++j) {
    const Complex z = aug.nodes()[static_cast<size_t>(j)];
    const Complex w = aug.values()[static_cast<size_t>(j)];
    bool merged = false;
    for (size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k] == z) {
        values[k] = 0.5 * (values[k] + w);
        merged = true;
        break;
      }
    }
    if (!merged) {
      nodes.push_back(z);
      values.push_back(w);
    }
  }
  auto [num, den] = nevanlinna_recursion(nodes, values);
  RationalDiskFunction classical(FourierPoly::from_taylor(num),
                                 FourierPoly::from_taylor(den));

  // g(z) = (f(z) + conj f(conj z))/2 carried out on the rational form:
  // g = (num den* + num* den) / (2 den den*), which is real-type exactly.
  std::vector<Complex> gnum_a = conv(num, conj_coeffs(den));
  const std::vector<Complex> gnum_b = conv(conj_coeffs(num), den);
  for (size_t i = 0; i < gnum_a.size(); ++i) gnum_a[i] = 0.5 * (gnum_a[i] + gnum_b[i]);
  std::vector<Complex> gden = conv(den, conj_coeffs(den));
  zero_imag(gnum_a);
  zero_imag(gden);
  RationalDiskFunction rational(FourierPoly::from_taylor(gnum_a),
                                FourierPoly::from_taylor(gden));
  FourierPoly taylor = rational.taylor(kInterpolantTaylorDegree);
  return NPRealSolution{std::move(rational), std::move(taylor), std::move(classical)};
}

Eigen::MatrixXcd cf_toeplitz(const CFProblem& problem) {
  if (problem.taylor.empty()) throw Error("cf_toeplitz: empty coefficient list");
  const int n = static_cast<int>(problem.taylor.size());
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) t(i, j) = problem.taylor[static_cast<size_t>(i - j)];
  return t;
}

NPSolution cf_solve(const CFProblem& problem, const ToleranceConfig& tol) {
  const Eigen::MatrixXcd t = cf_toeplitz(problem);
  const double sigma_max = t.jacobiSvd().singularValues()(0);
  if (sigma_max > 1.0 + tol.psd_tol)
    throw NotContractionError("cf_solve: Toeplitz matrix is not a contraction");

  // Schur recursion: peel one parameter per level, then rebuild with the
  // tail function taken as 0.
  std::vector<Complex> gammas;
  std::vector<Complex> cur = problem.taylor;
  const size_t n = problem.taylor.size() - 1;
  for (size_t level = 0;; ++level) {
    const Complex g = cur[0];
    gammas.push_back(g);
    if (level == n || std::abs(g) >= 1.0 - kDegenerateTol) break;
    // f_{k+1} = (f_k - g) / (z (1 - conj(g) f_k)) on Taylor coefficients.
    std::vector<Complex> numf = cur;
    numf[0] -= g;
    std::vector<Complex> denf(cur.size(), Complex{0.0, 0.0});
    denf[0] = 1.0;
    for (size_t i = 0; i < cur.size(); ++i) denf[i] -= std::conj(g) * cur[i];
    const std::vector<Complex> q = series_div(numf, denf, cur.size());
    cur.assign(q.begin() + 1, q.end());
  }
  std::vector<Complex> p{gammas.back()};
  std::vector<Complex> q{Complex{1.0, 0.0}};
  for (size_t i = gammas.size() - 1; i-- > 0;) {
    const Complex g = gammas[i];
    std::vector<Complex> zp(p.size() + 1, Complex{0.0, 0.0});
    std::copy(p.begin(), p.end(), zp.begin() + 1);
    std::vector<Complex> qe(q.size() + 1, Complex{0.0, 0.0});
    std::copy(q.begin(), q.end(), qe.begin());
    std::vector<Complex> num(zp.size()), den(zp.size());
    for (size_t k = 0; k < zp.size(); ++k) {
      num[k] = g * qe[k] + zp[k];
      den[k] = qe[k] + std::conj(g) * zp[k];
    }
    p = std::move(num);
    q = std::move(den);
  }
  if (all_real(problem.taylor, tol.eq_tol)) {
    zero_imag(p);
    zero_imag(q);
  }
  RationalDiskFunction rational(FourierPoly::from_taylor(p),
                                FourierPoly::from_taylor(q));
  FourierPoly taylor =
      rational.taylor(std::max<int>(static_cast<int>(n), kInterpolantTaylorDegree));
  return NPSolution{std::move(rational), std::move(taylor)};
}

InterpolationCheck verify_interpolant(const RationalDiskFunction& f,
                                      std::span<const Complex> nodes,
                                      std::span<const Complex> values,
                                      double tol, bool require_real_type,
                                      int grid_size) {
  InterpolationCheck check;
  for (size_t j = 0; j < nodes.size(); ++j) {
    const double res = std::abs(f.eval(nodes[j]) - values[j]);
    check.residuals.push_back(res);
    check.max_residual = std::max(check.max_residual, res);
  }
  for (int k = 0; k < grid_size; ++k)
    check.sup_norm = std::max(
        check.sup_norm,
        std::abs(f.eval_circle(2.0 * std::numbers::pi * k / grid_size)));
  check.real_type = f.is_real_type();
  check.pass = check.max_residual <= tol && check.sup_norm <= 1.0 + tol &&
               (!require_real_type || check.real_type);
  return check;
}

InterpolationCheck verify_interpolant(const FourierPoly& f,
                                      std::span<const Complex> nodes,
                                      std::span<const Complex> values,
                                      double tol, bool require_real_type,
                                      int grid_size) {
  return verify_interpolant(
      RationalDiskFunction(f, FourierPoly::constant(1.0)), nodes, values, tol,
      require_real_type, grid_size);
}

}  // namespace hardyr
