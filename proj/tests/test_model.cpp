#include <gtest/gtest.h>

#include "seirvac/model.hpp"
#include "test_support.hpp"

namespace seirvac {
namespace {

using testing::ref_params;
using testing::Rng;

TEST(SeirDerivative, MatchesHandComputedValues) {
  // Exact rational evaluation at x = (250, 150, 150, 450), v = 0.
  const Vector4d dx = seir_derivative(ref_params(), Vector4d(250, 150, 150, 450), 0.0);
  EXPECT_NEAR(dx(kS), -19.41565349544073, 1e-12);
  EXPECT_NEAR(dx(kE), -20.888297872340427, 1e-12);
  EXPECT_NEAR(dx(kI), -0.6382978723404256, 1e-12);
  EXPECT_NEAR(dx(kR), 40.94224924012158, 1e-12);
}

TEST(SeirDerivative, TypedOverloadAgreesWithVectorForm) {
  const PopulationState<double> x(400, 50, 50, 500);
  const auto typed = seir_derivative(ref_params(), x, 0.3);
  const Vector4d plain = seir_derivative(ref_params(), x.vec(), 0.3);
  EXPECT_EQ(typed.vec(), plain);
}

TEST(SeirDerivative, DiseaseFreeStateIsEquilibriumWithoutVaccination) {
  const Vector4d dx = seir_derivative(ref_params(), Vector4d(1000, 0, 0, 0), 0.0);
  EXPECT_EQ(dx, Vector4d::Zero());
}

TEST(SeirDerivative, VaccinationIsNotClamped) {
  // v outside [0, 1] is passed through unchanged.
  const auto p = ref_params();
  const Vector4d a = seir_derivative(p, Vector4d(1000, 0, 0, 0), 2.0);
  // mu N (1 - v) - mu S at S = N, v = 2.
  EXPECT_NEAR(a(kS), -2.0 * p.mu * p.n_total, 1e-12);
  EXPECT_NEAR(a(kR), 2.0 * p.mu * p.n_total, 1e-12);
}

TEST(SeirDerivative, SumIsZeroOnTheSimplex) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = rng.params();
    const Vector4d x = rng.simplex(p.n_total);
    const double v = rng.uniform(-1.0, 2.0);
    const Vector4d dx = seir_derivative(p, x, v);
    EXPECT_NEAR(dx.sum(), 0.0, 1e-10 * p.n_total) << "trial " << trial;
  }
}

TEST(SeirDerivative, InwardPointingOnTheBoundary) {
  // With v in [0, 1], a zero component cannot decrease.
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = rng.params();
    Vector4d x = rng.simplex(p.n_total);
    const int j = rng.integer(0, 3);
    x(j) = 0.0;
    x *= p.n_total / x.sum();
    const double v = rng.uniform(0.0, 1.0);
    EXPECT_GE(seir_derivative(p, x, v)(j), -1e-12) << "component " << j;
  }
}

TEST(ForcedEquilibrium, IsStationary) {
  const auto p = ref_params();
  for (double v : {0.0, 0.25, 0.9, 1.0}) {
    const auto eq = forced_equilibrium(p, v);
    EXPECT_NEAR(eq.sum(), p.n_total, 1e-9);
    const Vector4d dx = seir_derivative(p, eq.vec(), v);
    EXPECT_LT(dx.cwiseAbs().maxCoeff(), 1e-10) << "v = " << v;
  }
}

TEST(ForcedEquilibrium, DegenerateRatesThrow) {
  auto p = ref_params();
  p.mu = 0.0;
  p.omega = 0.0;
  EXPECT_THROW(forced_equilibrium(p, 0.5), std::domain_error);
  EXPECT_NO_THROW(forced_equilibrium(p, 0.0));
}

TEST(ValidateParams, NamesEachViolation) {
  EXPECT_TRUE(validate_params(ref_params()).ok());
  auto p = ref_params();
  p.beta = -1.0;
  p.n_total = 0.0;
  const auto report = validate_params(p);
  ASSERT_FALSE(report.ok());
  ASSERT_EQ(report.issues.size(), 2u);
  EXPECT_EQ(report.issues[0], "beta<0");
  EXPECT_EQ(report.issues[1], "n_total<=0");
}

TEST(Compartments, FromVectorRoundTrips) {
  const Vector4d v(1, 2, 3, 4);
  const auto x = PopulationState<double>::fromVector(v);
  EXPECT_EQ(x.vec(), v);
  EXPECT_DOUBLE_EQ(x.sum(), 10.0);
  EXPECT_DOUBLE_EQ(x.minComponent(), 1.0);
}

}  // namespace
}  // namespace seirvac
