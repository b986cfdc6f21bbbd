#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hardyr/errors.hpp"
#include "hardyr/interpolation.hpp"
#include "support.hpp"

using namespace hardyr;

namespace {

// Random problem with real nodes carrying real targets (conjugation-consistent)
// and a scale knob that controls feasibility.
struct RandomProblem {
  std::vector<Complex> nodes, values;
};

RandomProblem random_problem(std::mt19937& rng, int n, double value_scale) {
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  RandomProblem p;
  while (static_cast<int>(p.nodes.size()) < n) {
    Complex z = u01(rng) < 0.5 ? Complex{u(rng), 0.0} : Complex{u(rng), u(rng)};
    if (std::abs(z) >= 0.85) continue;
    bool ok = true;
    for (const Complex& w : p.nodes)
      if (std::abs(w - z) < 0.05) ok = false;
    if (!ok) continue;
    p.nodes.push_back(z);
    const bool zreal = std::abs(z.imag()) <= 1e-12;
    p.values.push_back(zreal ? Complex{value_scale * u(rng), 0.0}
                             : value_scale * Complex{u(rng), u(rng)});
  }
  return p;
}

}  // namespace

TEST_CASE("pick_matrix hand-checked entries") {
  const std::vector<Complex> one_node{Complex{0.0, 0.0}};
  const std::vector<Complex> w0{Complex{0.0, 0.0}}, w1{Complex{1.0, 0.0}};
  CHECK(pick_matrix(one_node, w0)(0, 0).real() == doctest::Approx(1.0));
  CHECK(pick_matrix(one_node, w1)(0, 0).real() == doctest::Approx(0.0));

  const std::vector<Complex> nodes{Complex{0.0, 0.0}, Complex{0.5, 0.0}};
  const std::vector<Complex> values{Complex{0.0, 0.0}, Complex{0.5, 0.0}};
  const Eigen::MatrixXcd p = pick_matrix(nodes, values);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(p(i, j) - Complex{1.0, 0.0}) <= 1e-15);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(p);
  CHECK(std::abs(eig.eigenvalues().minCoeff()) <= 1e-15);
  // the degenerate matrix is certified by f(z) = z
  const NPSolution sol = np_solve(nodes, values);
  CHECK(std::abs(sol.rational.eval(Complex{0.5, 0.0}) - Complex{0.5, 0.0}) <= 1e-12);
}

TEST_CASE("pick_matrix validation") {
  const std::vector<Complex> boundary{Complex{1.0, 0.0}};
  const std::vector<Complex> w{Complex{0.0, 0.0}};
  CHECK_THROWS_AS(pick_matrix(boundary, w), NodeOnBoundaryError);
  const std::vector<Complex> dup{Complex{0.5, 0.0}, Complex{0.5, 0.0}};
  const std::vector<Complex> w2{Complex{0.0, 0.0}, Complex{0.0, 0.0}};
  CHECK_THROWS_AS(pick_matrix(dup, w2), DuplicateNodesError);
}

TEST_CASE("augment_real follows the augmented node list") {
  // all real data: nothing to augment
  const std::vector<Complex> rn{Complex{0.5, 0.0}, Complex{-0.2, 0.0}};
  const std::vector<Complex> rv{Complex{0.25, 0.0}, Complex{0.1, 0.0}};
  const InterpolationProblem all_real = InterpolationProblem::create(rn, rv);
  CHECK(all_real.real_pair_count() == 2);
  const InterpolationProblem aug0 = augment_real(all_real);
  CHECK(aug0.size() == 2);

  // real node with non-real value: node duplicated verbatim, value conjugated
  const std::vector<Complex> n1{Complex{0.5, 0.0}};
  const std::vector<Complex> v1{Complex{0.3, 0.4}};
  const InterpolationProblem p1 = InterpolationProblem::create(n1, v1);
  CHECK(p1.real_node_count() == 1);
  CHECK(p1.real_pair_count() == 0);
  const InterpolationProblem a1 = augment_real(p1);
  REQUIRE(a1.size() == 2);
  CHECK(a1.nodes()[0] == a1.nodes()[1]);
  CHECK(std::abs(a1.values()[1] - std::conj(v1[0])) <= 1e-15);

  // non-real node: conjugate appended
  const std::vector<Complex> n2{Complex{0.3, 0.4}};
  const std::vector<Complex> v2{Complex{0.2, 0.1}};
  const InterpolationProblem a2 = augment_real(InterpolationProblem::create(n2, v2));
  REQUIRE(a2.size() == 2);
  CHECK(std::abs(a2.nodes()[1] - std::conj(n2[0])) <= 1e-15);
  CHECK(std::abs(a2.values()[1] - std::conj(v2[0])) <= 1e-15);
}

TEST_CASE("np_solvable_real rejects non-real targets at real nodes") {
  // the 2x2 block determinant drops below zero exactly as the formula says
  const std::vector<Complex> nodes{Complex{0.5, 0.0}};
  const Complex w{0.3, 0.4};
  const std::vector<Complex> values{w};
  const InterpolationProblem p = InterpolationProblem::create(nodes, values);
  const PickReport report = np_solvable_real(p);
  CHECK_FALSE(report.solvable);
  REQUIRE(report.forced_real_violations.size() == 1);
  CHECK(report.forced_real_violations[0] == 0);

  REQUIRE(report.matrix.rows() == 2);
  const Complex det = report.matrix(0, 0) * report.matrix(1, 1) -
                      report.matrix(0, 1) * report.matrix(1, 0);
  const double denom = 1.0 - 0.25;
  const double expected =
      (std::pow(1.0 - std::norm(w), 2) - std::norm(1.0 - w * w)) / (denom * denom);
  CHECK(std::abs(det.real() - expected) <= 1e-12);
  CHECK(std::abs(det.imag()) <= 1e-12);
  CHECK(expected < 0.0);
  // Re(w^2) < |w|^2 drives the failure
  CHECK((w * w).real() == doctest::Approx(-0.07));
  CHECK(std::norm(w) == doctest::Approx(0.25));

  CHECK_THROWS_AS(np_solve_real(p), NotSolvableError);
}

TEST_CASE("np_solvable_real accepts certified solvable data") {
  const std::vector<Complex> nodes{Complex{0.5, 0.0}};
  const std::vector<Complex> values{Complex{0.25, 0.0}};
  const InterpolationProblem p = InterpolationProblem::create(nodes, values);
  CHECK(np_solvable_real(p).solvable);  // f(z) = z/2 certifies
  const NPRealSolution sol = np_solve_real(p);
  CHECK(std::abs(sol.rational.eval(nodes[0]) - values[0]) <= 1e-12);
}

TEST_CASE("single complex node: solvable iff the 2x2 augmented matrix is PSD") {
  const std::vector<Complex> nodes{Complex{0.3, 0.4}};
  const std::vector<Complex> values{Complex{0.1, 0.2}};
  const InterpolationProblem p = InterpolationProblem::create(nodes, values);
  const PickReport report = np_solvable_real(p);
  // eigenvalue oracle on the augmented 2x2
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(report.matrix);
  CHECK(report.solvable == (eig.eigenvalues().minCoeff() >= -1e-9));
  CHECK(report.solvable);
  const NPRealSolution sol = np_solve_real(p);
  CHECK(std::abs(sol.rational.eval(nodes[0]) - values[0]) <= 1e-10);
  // g real-type forces g(conj z) = conj w automatically
  CHECK(std::abs(sol.rational.eval(std::conj(nodes[0])) - std::conj(values[0])) <= 1e-10);
  CHECK(sol.taylor.is_real_type(1e-10));
}

TEST_CASE("np_solve on basic data") {
  const std::vector<Complex> n1{Complex{0.0, 0.0}};
  const std::vector<Complex> v1{Complex{0.5, 0.0}};
  const NPSolution c = np_solve(n1, v1);
  CHECK(std::abs(c.rational.eval(Complex{0.0, 0.0}) - Complex{0.5, 0.0}) <= 1e-15);

  // degenerate Pick matrix forces f(z) = z
  const std::vector<Complex> n2{Complex{0.0, 0.0}, Complex{0.5, 0.0}};
  const std::vector<Complex> v2{Complex{0.0, 0.0}, Complex{0.5, 0.0}};
  const NPSolution forced = np_solve(n2, v2);
  const FourierPoly t = forced.rational.taylor(4);
  CHECK(std::abs(t.coeff(1) - 1.0) <= 1e-12);
  CHECK(std::abs(t.coeff(0)) <= 1e-12);

  // generic case verified through the output contract
  const std::vector<Complex> v3{Complex{0.5, 0.0}, Complex{0.0, 0.0}};
  const NPSolution g = np_solve(n2, v3);
  const InterpolationCheck check = verify_interpolant(g.rational, n2, v3, 1e-9);
  CHECK(check.pass);
}

TEST_CASE("np solver agrees with the PSD certificate on random problems") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> scale(0.3, 1.5);
  int solvable_count = 0, unsolvable_count = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const RandomProblem rp = random_problem(rng, n, scale(rng));
    const InterpolationProblem problem = InterpolationProblem::create(rp.nodes, rp.values);
    const PickReport report = np_solvable_real(problem);
    bool solved = true;
    try {
      const NPRealSolution sol = np_solve_real(problem);
      const InterpolationCheck check =
          verify_interpolant(sol.rational, rp.nodes, rp.values, 1e-7, true);
      CHECK(check.pass);
      // the sup-norm certificate in the other direction
      CHECK(check.sup_norm <= 1.0 + 1e-7);
    } catch (const NotSolvableError&) {
      solved = false;
    }
    CHECK(solved == report.solvable);
    (solved ? solvable_count : unsolvable_count)++;
  }
  // the generator must exercise both outcomes
  CHECK(solvable_count > 5);
  CHECK(unsolvable_count > 5);
}

TEST_CASE("np_solve_real applies the symmetrized average of the classical solution") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const RandomProblem rp = random_problem(rng, 1 + static_cast<int>(rng() % 3), 0.5);
    const InterpolationProblem problem = InterpolationProblem::create(rp.nodes, rp.values);
    if (!np_solvable_real(problem).solvable) continue;
    const NPRealSolution sol = np_solve_real(problem);
    for (const Complex& z : rp.nodes) {
      const Complex f_z = sol.classical.eval(z);
      const Complex f_conj = sol.classical.eval(std::conj(z));
      const Complex expect = 0.5 * (f_z + std::conj(f_conj));
      CHECK(std::abs(sol.rational.eval(z) - expect) <= 1e-9);
    }
  }
}

TEST_CASE("pick matrix PSD status is conjugation-invariant") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const RandomProblem rp = random_problem(rng, 3, 0.9);
    std::vector<Complex> cn, cv;
    for (const Complex& z : rp.nodes) cn.push_back(std::conj(z));
    for (const Complex& w : rp.values) cv.push_back(std::conj(w));
    const Eigen::MatrixXcd p = pick_matrix(rp.nodes, rp.values);
    const Eigen::MatrixXcd q = pick_matrix(cn, cv);
    CHECK((q - p.conjugate()).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("cf_toeplitz layout") {
  CHECK(cf_toeplitz(CFProblem{{Complex{1.0, 0.0}}})(0, 0) == Complex{1.0, 0.0});

  const CFProblem p{{Complex{0.5, 0.0}, Complex{0.5, 0.0}}};
  const Eigen::MatrixXcd t = cf_toeplitz(p);
  CHECK(t(0, 0) == Complex{0.5, 0.0});
  CHECK(t(0, 1) == Complex{0.0, 0.0});
  CHECK(t(1, 0) == Complex{0.5, 0.0});
  CHECK(t(1, 1) == Complex{0.5, 0.0});

  const CFProblem id{{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}}};
  CHECK(cf_toeplitz(id).jacobiSvd().singularValues()(0) == doctest::Approx(1.0));
}

TEST_CASE("cf_solve basics") {
  const NPSolution one = cf_solve(CFProblem{{Complex{1.0, 0.0}}});
  CHECK(std::abs(one.rational.eval(Complex{0.2, 0.1}) - Complex{1.0, 0.0}) <= 1e-12);

  const NPSolution zero = cf_solve(CFProblem{{Complex{0.0, 0.0}}});
  CHECK(std::abs(zero.rational.eval(Complex{0.2, 0.1})) <= 1e-12);

  // [0.5, 0.5]: independent eigen oracle on T^T T for the largest singular value
  const CFProblem p{{Complex{0.5, 0.0}, Complex{0.5, 0.0}}};
  const Eigen::MatrixXcd t = cf_toeplitz(p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(t.adjoint() * t);
  const double sigma = std::sqrt(eig.eigenvalues().maxCoeff());
  CHECK(sigma == doctest::Approx(0.8090169943749475).epsilon(1e-12));
  CHECK(sigma <= 1.0);
  const NPSolution sol = cf_solve(p);
  const auto got = sol.rational.taylor(1).taylor_coeffs(1);
  CHECK(std::abs(got[0] - Complex{0.5, 0.0}) <= 1e-12);
  CHECK(std::abs(got[1] - Complex{0.5, 0.0}) <= 1e-12);
  const InterpolationCheck check = verify_interpolant(sol.rational, {}, {}, 1e-9);
  CHECK(check.sup_norm <= 1.0 + 1e-9);

  const CFProblem too_big{{Complex{2.0, 0.0}}};
  CHECK_THROWS_AS(cf_solve(too_big), NotContractionError);
}

TEST_CASE("cf solvability matches the contraction certificate") {
  std::mt19937 rng(44);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng() % 6);
    std::vector<Complex> a(static_cast<size_t>(n) + 1);
    for (Complex& c : a) c = Complex{u(rng), 0.0};
    CFProblem p{a};
    const double sigma = cf_toeplitz(p).jacobiSvd().singularValues()(0);
    // rescale to a prescribed norm on either side of 1
    const double target = trial % 2 == 0 ? 0.9 : 1.2;
    for (Complex& c : p.taylor) c *= target / sigma;
    if (target < 1.0) {
      const NPSolution sol = cf_solve(p);
      const auto got = sol.rational.taylor(n).taylor_coeffs(n);
      for (size_t i = 0; i < p.taylor.size(); ++i)
        CHECK(std::abs(got[i] - p.taylor[i]) <= 1e-8);
      CHECK(sol.taylor.is_real_type(1e-10));
      const InterpolationCheck check = verify_interpolant(sol.rational, {}, {}, 1e-8);
      CHECK(check.sup_norm <= 1.0 + 1e-8);
    } else {
      CHECK_THROWS_AS(cf_solve(p), NotContractionError);
    }
  }
}

TEST_CASE("verify_interpolant reports residuals") {
  const RationalDiskFunction f(FourierPoly::monomial(1), FourierPoly::constant(1.0));
  const std::vector<Complex> zero_node{Complex{0.0, 0.0}};
  const std::vector<Complex> zero_value{Complex{0.0, 0.0}};
  CHECK(verify_interpolant(f, zero_node, zero_value, 1e-12).pass);

  const std::vector<Complex> node{Complex{0.5, 0.0}};
  const std::vector<Complex> value{Complex{0.4, 0.0}};
  const InterpolationCheck check = verify_interpolant(f, node, value, 1e-12);
  CHECK_FALSE(check.pass);
  CHECK(check.max_residual == doctest::Approx(0.1).epsilon(1e-12));
}
