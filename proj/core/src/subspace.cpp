#include "hardyr/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "hardyr/errors.hpp"
#include "hardyr/factorization.hpp"

namespace hardyr {

namespace {

constexpr double kGramSchmidtDrop = 1e-10;
constexpr double kStructureTol = 1e-7;
constexpr double kUndeterminedFit = 1e-4;

std::vector<int> shift_monoid(const std::set<int>& powers, int budget) {
  std::vector<int> shifts;
  if (powers == std::set<int>{1}) {
    for (int w = 0; w < budget; ++w) shifts.push_back(w);
  } else if (powers == std::set<int>{2, 3}) {
    shifts.push_back(0);
    for (int w = 2; w < budget; ++w) shifts.push_back(w);
  } else {
    throw Error("generate_invariant: powers must be {1} or {2,3}");
  }
  return shifts;
}

// Orthonormal column basis by modified Gram-Schmidt with one
// re-orthogonalization pass; near-dependent columns are dropped.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& columns) {
  const int rows = static_cast<int>(columns.rows());
  Eigen::MatrixXd q(rows, columns.cols());
  int kept = 0;
  for (int c = 0; c < columns.cols(); ++c) {
    Eigen::VectorXd v = columns.col(c);
    const double original = v.norm();
    if (original == 0.0) continue;
    v /= original;
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < kept; ++j) v -= q.col(j).dot(v) * q.col(j);
    const double residual = v.norm();
    if (residual < kGramSchmidtDrop) continue;
    q.col(kept++) = v / residual;
  }
  return q.leftCols(kept);
}

// Smallest m such that span(basis) contains a vector supported on [0, m];
// returns that (unit) vector. basis columns are orthonormal.
Eigen::VectorXd minimal_degree_element(const Eigen::MatrixXd& basis) {
  const int rows = static_cast<int>(basis.rows());
  const int k = static_cast<int>(basis.cols());
  for (int m = 0; m < rows; ++m) {
    if (rows - 1 - m == 0) break;  // no constraint rows left
    const Eigen::MatrixXd bottom = basis.bottomRows(rows - 1 - m);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(bottom, Eigen::ComputeFullV);
    const int rank_limit = std::min<int>(static_cast<int>(svd.singularValues().size()), k);
    int rank = 0;
    for (int i = 0; i < rank_limit; ++i)
      if (svd.singularValues()(i) > 1e-8) ++rank;
    if (rank < k) {
      Eigen::VectorXd v = basis * svd.matrixV().col(k - 1);
      return v / v.norm();
    }
  }
  return basis.col(0);  // already supported everywhere; degenerate caller
}

// Columns of `basis` orthogonal to col(other); both orthonormal.
Eigen::MatrixXd complement_within(const Eigen::MatrixXd& basis,
                                  const Eigen::MatrixXd& other) {
  Eigen::MatrixXd residual = basis - other * (other.transpose() * basis);
  return orthonormalize(residual);
}

struct MinimalFactorization {
  RationalDiskFunction phi;      // Blaschke part of the minimal element
  int origin_order = 0;
  bool had_outside_roots = false;
};

// Inner part of a window vector, read off its polynomial roots. Trailing and
// leading numerically-zero coefficients are trimmed first.
MinimalFactorization factor_minimal(const Eigen::VectorXd& vmin) {
  const double peak = vmin.cwiseAbs().maxCoeff();
  FourierPoly::CoeffMap coeffs;
  for (int i = 0; i < vmin.size(); ++i)
    if (std::abs(vmin(i)) > 1e-8 * peak) coeffs[i] = Complex{vmin(i), 0.0};
  const FourierPoly p(std::move(coeffs), 0.0);
  MinimalFactorization out;
  out.origin_order = p.lo();
  std::vector<Complex> inside;
  for (const Complex root : polynomial_roots(p)) {
    if (std::abs(root) <= 1.0 - 1e-8)
      inside.push_back(root);
    else
      out.had_outside_roots = true;
  }
  out.phi = blaschke_product(inside, out.origin_order);
  return out;
}

// Window basis of { num * p : (den p)_1 = c (den p)_0, deg(num p) < window }.
// With the constraint dropped (constrained = false) this is the Beurling
// model window { num * p : deg(num p) < window }.
Eigen::MatrixXd model_window(const RationalDiskFunction& phi, double c,
                             bool constrained, int window) {
  const FourierPoly& num = phi.num();
  const FourierPoly& den = phi.den();
  const int deg_num = num.hi();
  const int free_dim = window - deg_num;  // p of degree < free_dim
  if (free_dim <= 0) return Eigen::MatrixXd(window, 0);
  const Complex den0 = den.coeff(0);
  const Complex den1 = den.coeff(1);
  std::vector<Eigen::VectorXd> cols;
  for (int k = 0; k < free_dim; ++k) {
    if (constrained && k == 1) continue;  // tied to the k = 0 column
    FourierPoly p = FourierPoly::monomial(k);
    if (constrained && k == 0 && free_dim > 1) {
      const Complex tied = Complex{c, 0.0} - den1 / den0;
      p = p + FourierPoly::monomial(1, tied);
    }
    const FourierPoly v = multiply(num, p);
    Eigen::VectorXd col = Eigen::VectorXd::Zero(window);
    for (const auto& [n, a] : v.coeffs())
      if (n < window) col(n) = a.real();
    cols.push_back(col);
  }
  Eigen::MatrixXd m(window, static_cast<int>(cols.size()));
  for (size_t i = 0; i < cols.size(); ++i) m.col(static_cast<int>(i)) = cols[i];
  return orthonormalize(m);
}

double span_distance(const Eigen::MatrixXd& qa, const Eigen::MatrixXd& qb) {
  if (qa.cols() == 0 && qb.cols() == 0) return 0.0;
  const Eigen::MatrixXd diff =
      qa * qa.transpose() - qb * qb.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(diff);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

// Elements of span(basis) whose first `count` coefficients vanish.
Eigen::MatrixXd leading_zero_restrict(const Eigen::MatrixXd& basis, int count) {
  if (count == 0 || basis.cols() == 0) return basis;
  const Eigen::MatrixXd top = basis.topRows(count);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(top, Eigen::ComputeFullV);
  int rank = 0;
  for (int i = 0; i < std::min<int>(count, static_cast<int>(basis.cols())); ++i)
    if (svd.singularValues()(i) > 1e-10) ++rank;
  return basis * svd.matrixV().rightCols(static_cast<int>(basis.cols()) - rank);
}

FourierPoly column_to_poly(const Eigen::VectorXd& v) {
  FourierPoly::CoeffMap coeffs;
  const double peak = std::max(1e-300, v.cwiseAbs().maxCoeff());
  for (int i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > 1e-13 * peak) coeffs[i] = Complex{v(i), 0.0};
  return FourierPoly(std::move(coeffs), 0.0);
}

void sign_canonicalize(Eigen::VectorXd& v) {
  const double peak = v.cwiseAbs().maxCoeff();
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-7 * peak) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace

Eigen::MatrixXd detail::window_restrict(const Eigen::MatrixXd& basis, int window,
                                        double rank_tol) {
  const int rows = static_cast<int>(basis.rows());
  if (window >= rows || basis.cols() == 0)
    return basis.topRows(std::min(rows, window));
  const Eigen::MatrixXd bottom = basis.bottomRows(rows - window);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(bottom, Eigen::ComputeFullV);
  int rank = 0;
  const int limit = std::min<int>(static_cast<int>(svd.singularValues().size()),
                                  static_cast<int>(basis.cols()));
  for (int i = 0; i < limit; ++i)
    if (svd.singularValues()(i) > rank_tol) ++rank;
  const Eigen::MatrixXd inwin =
      basis * svd.matrixV().rightCols(static_cast<int>(basis.cols()) - rank);
  return inwin.topRows(window);
}

std::vector<FourierPoly> SubspaceBasis::polys(double drop_tol) const {
  std::vector<FourierPoly> out;
  for (int c = 0; c < vectors.cols(); ++c) {
    FourierPoly::CoeffMap coeffs;
    for (int n = 0; n < vectors.rows(); ++n)
      coeffs[n] = Complex{vectors(n, c), 0.0};
    out.emplace_back(std::move(coeffs), drop_tol);
  }
  return out;
}

SubspaceBasis generate_invariant(std::span<const FourierPoly> generators,
                                 const std::set<int>& powers, int budget) {
  if (generators.empty()) throw Error("generate_invariant: no generators");
  int max_deg = 0;
  for (const FourierPoly& g : generators) {
    if (g.is_zero()) throw Error("generate_invariant: zero generator");
    if (!g.is_analytic())
      throw NonAnalyticError("generate_invariant: generators must be analytic");
    if (!g.is_real_type())
      throw Error("generate_invariant: generators must be real-type");
    max_deg = std::max(max_deg, g.hi());
  }
  if (budget < 4 * (max_deg + 4))
    throw DegreeBudgetTooSmallError("generate_invariant: budget < 4*(max degree + 4)");

  const std::vector<int> shifts = shift_monoid(powers, budget);
  std::vector<Eigen::VectorXd> cols;
  for (const FourierPoly& g : generators) {
    for (int w : shifts) {
      if (w + g.hi() >= budget) continue;
      Eigen::VectorXd col = Eigen::VectorXd::Zero(budget);
      for (const auto& [n, a] : g.coeffs()) col(n + w) = a.real();
      cols.push_back(std::move(col));
    }
  }
  Eigen::MatrixXd raw(budget, static_cast<int>(cols.size()));
  for (size_t i = 0; i < cols.size(); ++i) raw.col(static_cast<int>(i)) = cols[i];

  SubspaceBasis basis;
  basis.vectors = orthonormalize(raw);
  basis.budget = budget;
  basis.safe_degree = budget - max_deg - *powers.rbegin();
  return basis;
}

FourierPoly wandering_vector(const SubspaceBasis& m) {
  const int s = m.safe_degree;
  const Eigen::MatrixXd q = detail::window_restrict(m.vectors, s);
  const Eigen::MatrixXd q2 = detail::window_restrict(m.vectors, s - 1);
  if (q.cols() == 0) throw Error("wandering_vector: empty subspace window");
  Eigen::MatrixXd shifted = Eigen::MatrixXd::Zero(s, q2.cols());
  shifted.bottomRows(s - 1) = q2;
  const Eigen::MatrixXd wander = complement_within(q, shifted);
  if (wander.cols() == 0)
    throw DoublyInvariantError("wandering_vector: complement of zM in M is numerically zero");
  Eigen::VectorXd v = wander.col(0);
  sign_canonicalize(v);
  return column_to_poly(v);
}

const char* to_string(SubspaceForm form) {
  switch (form) {
    case SubspaceForm::Beurling: return "Beurling";
    case SubspaceForm::Constrained: return "Constrained";
    case SubspaceForm::Full: return "Full";
    case SubspaceForm::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

ClassificationResult classify(const SubspaceBasis& m,
                              const std::set<int>& powers) {
  const int s = m.safe_degree;
  Eigen::MatrixXd q = detail::window_restrict(m.vectors, s);
  ClassificationResult result;
  if (q.cols() == s) {
    result.form = SubspaceForm::Full;
    result.phi = FourierPoly::constant(1.0);
    result.phi_rational = RationalDiskFunction();
    return result;
  }

  // z-invariance below the window: shift the (s-1)-window into the s-window.
  const Eigen::MatrixXd q2 = detail::window_restrict(m.vectors, s - 1);
  Eigen::MatrixXd shifted = Eigen::MatrixXd::Zero(s, q2.cols());
  shifted.bottomRows(s - 1) = q2;
  double z_defect = 0.0;
  if (shifted.cols() > 0) {
    const Eigen::MatrixXd residual = shifted - q * (q.transpose() * shifted);
    z_defect = residual.colwise().norm().maxCoeff();
  }
  const bool z_invariant = z_defect <= kStructureTol;

  if (powers == std::set<int>{1} || z_invariant) {
    result.form = SubspaceForm::Beurling;
    FourierPoly wv = wandering_vector(m);
    const MinimalFactorization mf = factor_minimal(minimal_degree_element(q));
    result.phi = std::move(wv);
    result.phi_rational = mf.phi;
    result.origin_zero_folded = mf.origin_order > 0;
    result.fit = span_distance(q, model_window(mf.phi, 0.0, false, s));
    if (result.fit > kUndeterminedFit) result.form = SubspaceForm::Undetermined;
    return result;
  }

  // Constrained branch: M = phi([1 + c z] (+) z^2 H^2). When phi vanishes to
  // order >= 2 at the origin the whole window lies in z^2 H^2; strip z^2 and
  // retry, folding the powers into phi.
  int strip = 0;
  int window = s;
  for (;;) {
    const Eigen::MatrixXd kernel2 = leading_zero_restrict(q, 2);
    if (kernel2.cols() < q.cols() || q.cols() == 0) break;
    if (window <= 4) break;
    window -= 2;
    strip += 2;
    q = q.bottomRows(window);
    q = orthonormalize(q);
  }
  const Eigen::MatrixXd nsub = leading_zero_restrict(q, 2);
  if (nsub.cols() != q.cols() - 1) {
    result.form = SubspaceForm::Undetermined;
    result.fit = 1.0;
    return result;
  }

  const MinimalFactorization mf = factor_minimal(minimal_degree_element(nsub));
  // The minimal element of M n z^2 H^2 is phi_num * z^2; remove the z^2.
  const int phi_origin = std::max(0, mf.origin_order - 2) + strip;
  RationalDiskFunction phi_rat(mf.phi.num().shifted(phi_origin - mf.origin_order),
                               mf.phi.den());

  // Coset direction and c = q_1 / q_0 of the series v / phi.
  const Eigen::MatrixXd coset = complement_within(q, nsub);
  if (coset.cols() != 1) {
    result.form = SubspaceForm::Undetermined;
    result.fit = 1.0;
    return result;
  }
  const int local_origin = phi_origin - strip;
  const FourierPoly num_reduced = phi_rat.num().shifted(-phi_origin);
  const FourierPoly vc = column_to_poly(coset.col(0));
  std::vector<Complex> vc_taylor = vc.taylor_coeffs(local_origin + 1);
  std::vector<Complex> den_taylor = phi_rat.den().taylor_coeffs(local_origin + 1);
  // t = vc * den, truncated at z^{local_origin + 1}
  std::vector<Complex> t(static_cast<size_t>(local_origin) + 2, Complex{0.0, 0.0});
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = 0; j <= i; ++j)
      t[i] += vc_taylor[j] * (i - j < den_taylor.size() ? den_taylor[i - j] : Complex{0.0, 0.0});
  // divide by num = z^{local_origin} * (reduced Blaschke numerator)
  std::vector<Complex> qq(2, Complex{0.0, 0.0});
  const std::vector<Complex> nt = num_reduced.taylor_coeffs(1);
  qq[0] = t[static_cast<size_t>(local_origin)] / nt[0];
  qq[1] = (t[static_cast<size_t>(local_origin) + 1] - nt[1] * qq[0]) / nt[0];
  result.c = (qq[1] / qq[0]).real();

  RationalDiskFunction phi_local(num_reduced.shifted(local_origin), phi_rat.den());
  result.fit = span_distance(q, model_window(phi_local, result.c, true, window));
  result.form =
      result.fit <= kUndeterminedFit ? SubspaceForm::Constrained : SubspaceForm::Undetermined;
  RationalDiskFunction phi_full(phi_rat.num(), phi_rat.den());
  result.phi = phi_full.taylor(std::max(0, s - 1));
  result.phi_rational = std::move(phi_full);
  result.origin_zero_folded = phi_origin > 0;
  return result;
}

double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.budget != b.budget)
    throw Error("subspace_distance: bases must share the same budget");
  const int s = std::min(a.safe_degree, b.safe_degree);
  const Eigen::MatrixXd qa = detail::window_restrict(a.vectors, s);
  const Eigen::MatrixXd qb = detail::window_restrict(b.vectors, s);
  return span_distance(qa, qb);
}

}  // namespace hardyr
