#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "seirvac/spectral.hpp"
#include "test_support.hpp"

namespace seirvac {
namespace {

using testing::Rng;

Matrix4d random_matrix(Rng& rng, double lo = -1.0, double hi = 1.0) {
  Matrix4d m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = rng.uniform(lo, hi);
  return m;
}

double eigen_abscissa(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  return es.eigenvalues().real().maxCoeff();
}

TEST(MetzlerCheck, ReportsViolationsZeroBased) {
  Matrix4d m = Matrix4d::Constant(1.0);
  m.diagonal().setConstant(-5.0);
  EXPECT_TRUE(metzler_check(m).is_metzler);
  m(3, 0) = -0.1;
  m(0, 1) = -2.0;
  const auto r = metzler_check(m);
  EXPECT_FALSE(r.is_metzler);
  ASSERT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0], std::make_pair(0, 1));
  EXPECT_EQ(r.violations[1], std::make_pair(3, 0));
}

TEST(MetzlerCheck, MatchesDefinitionOnRandomMatrices) {
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix4d m = random_matrix(rng, -0.3, 1.0);
    bool expected = true;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) expected = expected && (r == c || m(r, c) >= 0.0);
    EXPECT_EQ(metzler_check(m).is_metzler, expected);
  }
}

TEST(MetzlerCheck, MetzlerMatricesHaveNonnegativeExponentials) {
  Rng rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix4d m = random_matrix(rng, 0.0, 1.0);
    m.diagonal() = Vector4d::NullaryExpr([&] { return rng.uniform(-5, 1); });
    ASSERT_TRUE(metzler_check(m).is_metzler);
    for (double t : {0.01, 1.0, 10.0}) {
      EXPECT_GE(matrix_exponential(m, t).minCoeff(), 0.0) << "trial " << trial << " t " << t;
    }
  }
}

TEST(StabilityAbscissa, MatchesEigenSolver) {
  Rng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix4d m = random_matrix(rng, -2, 2);
    EXPECT_NEAR(stability_abscissa(m), eigen_abscissa(m), 1e-7) << "trial " << trial;
  }
}

TEST(StabilityAbscissa, BlockTriangularIsMaxOfBlocks) {
  Rng rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix4d a = random_matrix(rng, -2, 2);
    const Matrix4d b = random_matrix(rng, -2, 2);
    const Matrix4d c = random_matrix(rng, -5, 5);
    Matrix8d m = Matrix8d::Zero();
    m.topLeftCorner<4, 4>() = a;
    m.bottomLeftCorner<4, 4>() = c;
    m.bottomRightCorner<4, 4>() = b;
    EXPECT_EQ(stability_abscissa(m), std::max(stability_abscissa(a), stability_abscissa(b)));
    EXPECT_NEAR(stability_abscissa(m), eigen_abscissa(m), 1e-7);
  }
}

TEST(StabilityAbscissa, DiagonalAndScalar) {
  Matrix4d d = Vector4d(-1, -0.5, -3, -0.25).asDiagonal();
  EXPECT_EQ(stability_abscissa(d), -0.25);
  Eigen::Matrix<double, 1, 1> one;
  one << 2.5;
  EXPECT_EQ(stability_abscissa(one), 2.5);
}

TEST(SpectralNorm, MatchesSingularValueDecomposition) {
  Rng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix8d m;
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) m(r, c) = rng.uniform(-1, 1) * (rng.uniform(0, 1) < 0.3 ? 0 : 1);
    Eigen::JacobiSVD<Matrix8d> svd(m);
    const double ref = svd.singularValues()(0);
    EXPECT_NEAR(spectral_norm(m), ref, 1e-7 * (1 + ref)) << "trial " << trial;
  }
}

TEST(SpectralNorm, ZeroAndRankOne) {
  EXPECT_EQ(spectral_norm(Matrix4d::Zero()), 0.0);
  const Vector4d u(1, 2, 3, 4), v(0, 0, 1, 0);
  EXPECT_NEAR(spectral_norm(Matrix4d(u * v.transpose())), u.norm(), 1e-12);
  Matrix4d single = Matrix4d::Zero();
  single(3, 0) = -7.0;
  EXPECT_NEAR(spectral_norm(single), 7.0, 1e-12);
}

TEST(MatrixExponential, IdentityAtZeroAndScalarCase) {
  Rng rng(56);
  const Matrix4d m = random_matrix(rng);
  EXPECT_EQ(matrix_exponential(m, 0.0), Matrix4d::Identity());
  Eigen::Matrix<double, 1, 1> a;
  a << -0.7;
  EXPECT_NEAR(matrix_exponential(a, 3.0)(0, 0), std::exp(-2.1), 1e-15);
  EXPECT_THROW(matrix_exponential(m, std::numeric_limits<double>::infinity()),
               std::invalid_argument);
}

TEST(MatrixExponential, MatchesEigenMatrixFunctions) {
  Rng rng(57);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix4d m = random_matrix(rng, -3, 3);
    for (double t : {0.1, 1.0, 5.0}) {
      const Matrix4d ours = matrix_exponential(m, t);
      const Matrix4d ref = (m * t).exp();
      EXPECT_LT((ours - ref).cwiseAbs().maxCoeff(), 1e-10 * (1.0 + ref.cwiseAbs().maxCoeff()));
    }
  }
}

TEST(MatrixExponential, SemigroupProperty) {
  Rng rng(58);
  const Matrix4d m = random_matrix(rng);
  const Matrix4d lhs = matrix_exponential(m, 0.7) * matrix_exponential(m, 1.6);
  const Matrix4d rhs = matrix_exponential(m, 2.3);
  EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12 * (1 + rhs.cwiseAbs().maxCoeff()));
}

}  // namespace
}  // namespace seirvac
