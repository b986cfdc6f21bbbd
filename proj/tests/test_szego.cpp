#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hardyr/errors.hpp"
#include "hardyr/szego.hpp"
#include "support.hpp"

using namespace hardyr;
using testsup::kPi;

namespace {

std::vector<double> sampled(int m, const std::function<double(double)>& f) {
  std::vector<double> out(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) out[static_cast<size_t>(k)] = f(2.0 * kPi * k / m);
  return out;
}

// Strictly positive symmetric trigonometric weight.
std::vector<double> random_symmetric_weight(std::mt19937& rng, int m) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> amp(6);
  for (double& a : amp) a = 0.25 * u(rng);
  return sampled(m, [&amp](double theta) {
    double acc = 0.0;
    for (size_t k = 0; k < amp.size(); ++k)
      acc += amp[k] * std::cos(static_cast<double>(k + 1) * theta);
    return 0.5 + std::exp(acc);
  });
}

// Weighted objective (1/M) sum w |1 - f|^2 for an explicit trial polynomial
// f = sum c_j z^j (j >= 1); the oracle route for the projection inequality.
double objective(const std::vector<double>& w, const std::vector<Complex>& c) {
  const int m = static_cast<int>(w.size());
  double acc = 0.0;
  for (int k = 0; k < m; ++k) {
    const double theta = 2.0 * kPi * k / m;
    Complex f{0.0, 0.0};
    for (size_t j = 0; j < c.size(); ++j)
      f += c[j] * std::polar(1.0, static_cast<double>(j + 1) * theta);
    acc += w[static_cast<size_t>(k)] * std::norm(1.0 - f);
  }
  return acc / m;
}

}  // namespace

TEST_CASE("geometric mean of constant weights") {
  const Weight one = Weight::create(std::vector<double>(64, 1.0));
  CHECK(geometric_mean(one) == doctest::Approx(1.0).epsilon(1e-14));
  const Weight c = Weight::create(std::vector<double>(64, 3.25));
  CHECK(geometric_mean(c) == doctest::Approx(3.25).epsilon(1e-14));
}

TEST_CASE("geometric mean of |1 - e^{it}|^2 via the floor rule") {
  // The sample at theta = 0 vanishes; the floor rule clamps it, which is how
  // the singular point is excluded from the log average.
  const int m = 1 << 14;
  std::vector<double> w = sampled(m, [](double theta) {
    return std::norm(1.0 - std::polar(1.0, theta));
  });
  w[0] = 1e-12;
  const Weight weight = Weight::create(std::move(w));
  CHECK(std::abs(geometric_mean(weight) - 1.0) <= 1e-3);

  // untouched zero sample trips the zero branch
  std::vector<double> w0 = sampled(m, [](double theta) {
    return std::norm(1.0 - std::polar(1.0, theta));
  });
  CHECK(geometric_mean(Weight::create(std::move(w0))) == 0.0);
}

TEST_CASE("weight validation") {
  CHECK_THROWS(Weight::create(std::vector<double>(63, 1.0)));   // not a power of two
  std::vector<double> neg(64, 1.0);
  neg[5] = -0.1;
  CHECK_THROWS(Weight::create(std::move(neg)));
  std::vector<double> asym(64, 1.0);
  asym[1] = 2.0;  // breaks w(theta) = w(-theta)
  CHECK_THROWS(Weight::create(std::move(asym)));
}

TEST_CASE("infimum for the flat weight is 1 at any degree") {
  const Weight one = Weight::create(std::vector<double>(256, 1.0));
  for (const int degree : {1, 4, 16, 64})
    CHECK(szego_infimum_ls(one, degree) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("infimum converges to the geometric mean for |1+0.5 e^{it}|^2") {
  const int m = 4096;
  const Weight w = Weight::create(sampled(m, [](double theta) {
    return std::norm(1.0 + 0.5 * std::polar(1.0, theta));
  }));
  // geometric mean of |outer|^2 equals |outer(0)|^2 = 1
  CHECK(std::abs(geometric_mean(w) - 1.0) <= 1e-12);
  const double inf = szego_infimum_ls(w, 128);
  CHECK(std::abs(inf - 1.0) <= 1e-4);
  // monotone nonincreasing in the degree
  double prev = szego_infimum_ls(w, 1);
  for (const int degree : {2, 4, 8, 16, 32}) {
    const double cur = szego_infimum_ls(w, degree);
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }
}

TEST_CASE("real and complex infima agree on symmetric weights") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 6; ++trial) {
    const Weight w = Weight::create(random_symmetric_weight(rng, 1024));
    const double real_inf = szego_infimum_ls(w, 24);
    const double complex_inf = szego_infimum_ls_complex(w, 24);
    CHECK(std::abs(real_inf - complex_inf) <= 1e-8);
  }
}

TEST_CASE("two-bump symmetric weight: real equals complex infimum") {
  const int m = 2048;
  const Weight w = Weight::create(sampled(m, [](double theta) {
    return 0.3 + std::exp(-8.0 * std::pow(std::cos(theta) - 0.5, 2)) +
           std::exp(-6.0 * std::pow(std::cos(theta) + 0.6, 2));
  }));
  CHECK(std::abs(szego_infimum_ls(w, 48) - szego_infimum_ls_complex(w, 48)) <= 1e-8);
}

TEST_CASE("projection inequality on random complex trials") {
  // ||1 - phi(f)||_w <= ||1 - f||_w for symmetric weights
  std::mt19937 rng(52);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<double> w = random_symmetric_weight(rng, 512);
    std::vector<Complex> c(8), creal(8);
    for (size_t j = 0; j < c.size(); ++j) {
      c[j] = Complex{u(rng), u(rng)};
      creal[j] = Complex{c[j].real(), 0.0};  // phi acts coefficient-wise
    }
    CHECK(objective(w, creal) <= objective(w, c) + 1e-12);
  }
}

TEST_CASE("degree bounds are enforced") {
  const Weight w = Weight::create(std::vector<double>(64, 1.0));
  CHECK_THROWS_AS(szego_infimum_ls(w, 0), DegreeTooLargeError);
  CHECK_THROWS_AS(szego_infimum_ls(w, 17), DegreeTooLargeError);
  CHECK_NOTHROW(szego_infimum_ls(w, 16));
}
