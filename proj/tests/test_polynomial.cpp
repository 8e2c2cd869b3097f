#include <algorithm>
#include <complex>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "seirvac/polynomial.hpp"
#include "test_support.hpp"

namespace seirvac {
namespace {

using testing::Rng;
using Complex = std::complex<double>;

// Sorted by (real, imag) so two root lists can be compared elementwise.
std::vector<Complex> sorted(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
    if (std::abs(a.real() - b.real()) > 1e-6) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

// Roots via the companion matrix and Eigen's dense eigensolver; test-only.
std::vector<Complex> companion_roots(const RealPolynomial& p) {
  const int n = p.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) c(0, k) = -p[n - 1 - k] / p.leading();
  for (int k = 1; k < n; ++k) c(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<Complex> out;
  for (int k = 0; k < n; ++k) out.push_back(es.eigenvalues()(k));
  return out;
}

TEST(Polynomial, ConstructionTrimsLeadingZeros) {
  const RealPolynomial p{1.0, 2.0, 0.0, 0.0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p[5], 0.0);
  EXPECT_TRUE(RealPolynomial{}.isZero());
}

TEST(Polynomial, ArithmeticAndEvaluation) {
  const RealPolynomial a{1.0, 1.0};   // 1 + s
  const RealPolynomial b{-1.0, 1.0};  // -1 + s
  const RealPolynomial prod = a * b;
  EXPECT_EQ(prod.degree(), 2);
  EXPECT_EQ(prod[0], -1.0);
  EXPECT_EQ(prod[1], 0.0);
  EXPECT_EQ(prod[2], 1.0);
  EXPECT_EQ((a + b)[1], 2.0);
  EXPECT_EQ((3.0 * a)[0], 3.0);
  EXPECT_EQ(prod(2.0), 3.0);
  EXPECT_EQ(prod(Complex(0, 1)), Complex(-2, 0));
}

TEST(Polynomial, FromRootsAndConjugateRoots) {
  const auto p = RealPolynomial::fromRoots({-1.0, -2.0});
  EXPECT_EQ(p[0], 2.0);
  EXPECT_EQ(p[1], 3.0);
  EXPECT_EQ(p[2], 1.0);
  const auto q = RealPolynomial::fromConjugateRoots({{-1.0, 2.0}, {-1.0, -2.0}, {-3.0, 0.0}});
  // (s^2 + 2 s + 5)(s + 3)
  EXPECT_EQ(q.degree(), 3);
  EXPECT_EQ(q[0], 15.0);
  EXPECT_EQ(q[1], 11.0);
  EXPECT_EQ(q[2], 5.0);
}

TEST(CharacteristicPolynomial, KnownMatrix) {
  Eigen::Matrix2d m;
  m << 1, 2, 3, 4;
  const auto p = characteristic_polynomial(m);
  // s^2 - 5 s - 2
  EXPECT_NEAR(p[0], -2.0, 1e-14);
  EXPECT_NEAR(p[1], -5.0, 1e-14);
  EXPECT_EQ(p[2], 1.0);
}

TEST(CharacteristicPolynomial, RootsAreTheEigenvalues) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.integer(1, 8);
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = rng.uniform(-2, 2);
    const auto p = characteristic_polynomial(m);
    ASSERT_EQ(p.degree(), n);
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    for (int k = 0; k < n; ++k) {
      const Complex lambda = es.eigenvalues()(k);
      EXPECT_LT(detail::relative_residual(p, lambda), 1e-10) << "trial " << trial;
    }
  }
}

TEST(PolynomialRoots, SimpleCases) {
  const auto r = polynomial_roots(RealPolynomial{-2.0, 1.0});
  ASSERT_TRUE(r.converged);
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_NEAR(r.roots[0].real(), 2.0, 1e-14);

  const auto q = polynomial_roots(RealPolynomial{0.0, 0.0, 1.0, 1.0});  // s^2 (s + 1)
  ASSERT_TRUE(q.converged);
  const auto roots = sorted(q.roots);
  EXPECT_NEAR(roots[0].real(), -1.0, 1e-14);
  EXPECT_EQ(roots[1], Complex(0, 0));
  EXPECT_EQ(roots[2], Complex(0, 0));

  EXPECT_THROW(polynomial_roots(RealPolynomial{3.0}), std::invalid_argument);
}

TEST(PolynomialRoots, ComplexPairsComeInExactConjugates) {
  const auto p = RealPolynomial::fromConjugateRoots({{-0.5, 3.0}, {0.25, 1.0}, {-4.0, 0.0}});
  const auto r = polynomial_roots(p);
  ASSERT_TRUE(r.converged);
  int pairs = 0;
  for (const auto& z : r.roots) {
    if (z.imag() == 0.0) continue;
    ++pairs;
    EXPECT_NE(std::find(r.roots.begin(), r.roots.end(), std::conj(z)), r.roots.end());
  }
  EXPECT_EQ(pairs, 4);
}

TEST(PolynomialRoots, MatchCompanionEigenvalues) {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(1, 8);
    typename RealPolynomial::Coefficients c(n + 1);
    for (int k = 0; k <= n; ++k) c(k) = rng.uniform(-1, 1);
    c(n) = rng.uniform(0.5, 1.5);
    const RealPolynomial p(c);
    const auto r = polynomial_roots(p);
    ASSERT_TRUE(r.converged) << "trial " << trial;
    const auto ours = sorted(r.roots);
    const auto ref = sorted(companion_roots(p));
    ASSERT_EQ(ours.size(), ref.size());
    // Every reference root has one of ours nearby.
    for (const auto& z : ref) {
      double best = 1e300;
      for (const auto& w : ours) best = std::min(best, std::abs(z - w));
      EXPECT_LT(best, 1e-6 * (1.0 + std::abs(z))) << "trial " << trial;
    }
  }
}

TEST(RouthArray, ThirdOrderExample) {
  // s^3 + 2 s^2 + 3 s + 1: first column 1, 2, 2.5, 1.
  const auto ra = routh_array(RealPolynomial{1.0, 3.0, 2.0, 1.0});
  ASSERT_EQ(ra.first_column.size(), 4u);
  EXPECT_DOUBLE_EQ(ra.first_column[2], 2.5);
  EXPECT_DOUBLE_EQ(ra.first_column[3], 1.0);
  EXPECT_EQ(ra.sign_changes, 0);
}

TEST(RouthArray, CountsRightHalfPlaneRoots) {
  // Roots 1, 2, -3: two sign changes.
  const auto p = RealPolynomial::fromRoots({1.0, 2.0, -3.0});
  const auto ra = routh_array(p);
  EXPECT_EQ(ra.sign_changes, 2);
}

TEST(HurwitzCheck, Basics) {
  EXPECT_TRUE(hurwitz_check(RealPolynomial::fromRoots({-1.0, -2.0, -3.0})));
  EXPECT_FALSE(hurwitz_check(RealPolynomial::fromRoots({-1.0, 2.0})));
  // Roots on the imaginary axis: s^2 + 1 and s (s + 1).
  EXPECT_FALSE(hurwitz_check(RealPolynomial{1.0, 0.0, 1.0}));
  EXPECT_FALSE(hurwitz_check(RealPolynomial{0.0, 1.0, 1.0}));
  // (s + 1)(s^2 + 1): positive coefficients, singular row.
  EXPECT_FALSE(hurwitz_check(RealPolynomial{1.0, 1.0, 1.0, 1.0}));
  // Negative leading coefficient with all roots in the left half plane.
  EXPECT_TRUE(hurwitz_check(-1.0 * RealPolynomial::fromRoots({-1.0, -5.0})));
  EXPECT_THROW(hurwitz_check(RealPolynomial{2.0}), std::invalid_argument);
}

TEST(HurwitzCheck, AgreesWithRootsOnRandomPolynomials) {
  Rng rng(43);
  int stable = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.integer(1, 8);
    std::vector<Complex> roots;
    while (static_cast<int>(roots.size()) < n) {
      const double re = rng.uniform(0.05, 3.0) * (rng.uniform(0, 1) < 0.85 ? -1.0 : 1.0);
      if (n - static_cast<int>(roots.size()) >= 2 && rng.uniform(0, 1) < 0.5) {
        const double im = rng.uniform(0.1, 3.0);
        roots.emplace_back(re, im);
        roots.emplace_back(re, -im);
      } else {
        roots.emplace_back(re, 0.0);
      }
    }
    const auto p = RealPolynomial::fromConjugateRoots(roots);
    const bool expected = std::all_of(roots.begin(), roots.end(),
                                      [](const Complex& z) { return z.real() < 0; });
    stable += expected;
    EXPECT_EQ(hurwitz_check(p), expected) << "trial " << trial;
  }
  EXPECT_GT(stable, 40);
  EXPECT_LT(stable, 360);
}

}  // namespace
}  // namespace seirvac
