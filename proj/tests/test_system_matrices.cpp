#include <gtest/gtest.h>

#include "seirvac/system_matrices.hpp"
#include "seirvac/vaccination.hpp"
#include "test_support.hpp"

namespace seirvac {
namespace {

using testing::ref_gains;
using testing::ref_observer;
using testing::ref_params;
using testing::Rng;

TEST(SystemMatrices, ReferenceEntries) {
  const auto m = build_system_matrices(ref_params(), ref_observer(), ref_gains(), 150.0, 150.0);
  EXPECT_NEAR(m.a(0, 0), -0.22325531914893618, 1e-15);
  EXPECT_NEAR(m.a(1, 0), 0.219, 1e-15);
  EXPECT_NEAR(m.a_hat(0, 0), -1.004255319148936, 1e-14);
  EXPECT_NEAR(m.a_hat(3, 0), 0.781, 1e-15);
  EXPECT_NEAR(m.a_hat(3, 3), -0.007826747720364742, 1e-15);
  EXPECT_EQ(m.a_hat(3, 2), 0.0);
  EXPECT_NEAR(m.a_hat(0, 3), 0.0035714285714285713, 1e-15);
  EXPECT_NEAR(m.b(0, 0), -0.781, 1e-15);
}

TEST(SystemMatrices, ZeroMuHatThrows) {
  auto q = ref_observer();
  q.mu_hat = 0.0;
  EXPECT_THROW(build_system_matrices(ref_params(), q, ref_gains(), 1.0, 1.0), std::domain_error);
}

struct Draw {
  EpidemicParams<double> p;
  ObserverParams<double> q;
  ControlGains<double> k;
  DecompositionAnchors<double> anchors;
  Vector4d x;
  Vector4d xh;
};

Draw random_draw(Rng& rng) {
  Draw d;
  d.p = rng.params();
  d.q = rng.observer();
  d.k = {rng.uniform(-1, 1), rng.uniform(-1, 1),   rng.uniform(-1, 1),
         rng.uniform(-1, 1), rng.uniform(-2e-3, 2e-3), rng.uniform(0, 0.05)};
  d.anchors = {rng.uniform(0, 1000), rng.uniform(0, 1000), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  d.x = rng.simplex(1000.0);
  d.xh = rng.simplex(1000.0);
  return d;
}

// The closed loop written with the matrices reproduces the model right-hand
// sides with V from the full law.
TEST(SystemMatrices, ClosedLoopMatchesModelDerivatives) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Draw d = random_draw(rng);
    const auto m = build_system_matrices(d.p, d.q, d.k, d.x(kI), d.xh(kI));
    const auto aff = affine_vectors_and_bounds(d.p, d.q, d.k);
    const double v = vaccination_full(d.q, d.k, ObserverState<double>::fromVector(d.xh));

    const Vector4d obs = observer_derivative(d.q, d.xh, v);
    const Vector4d obs_m = m.a_hat * d.xh + aff.b_hat;
    const Vector4d plant = seir_derivative(d.p, d.x, v);
    const Vector4d plant_m = m.a * d.x + m.b * d.xh + aff.b;
    const double scale = 1.0 + obs.cwiseAbs().maxCoeff() + plant.cwiseAbs().maxCoeff();
    EXPECT_LT((obs - obs_m).cwiseAbs().maxCoeff(), 1e-11 * scale) << "trial " << trial;
    EXPECT_LT((plant - plant_m).cwiseAbs().maxCoeff(), 1e-11 * scale) << "trial " << trial;
  }
}

TEST(Decomposition, ReconstructsEveryBlock) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const Draw d = random_draw(rng);
    const double i = d.x(kI), ih = d.xh(kI);
    const auto m = build_system_matrices(d.p, d.q, d.k, i, ih);
    const auto dec = build_decomposition(d.p, d.q, d.k, d.anchors, i, ih);
    EXPECT_LT((dec.a0 + dec.delta_a - m.a).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((dec.a_hat0 + dec.delta_a_hat - m.a_hat).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((dec.b0 + dec.delta_b - (m.a - m.a_hat + m.b)).cwiseAbs().maxCoeff(), 1e-12);

    Matrix8d abar = Matrix8d::Zero();
    abar.topLeftCorner<4, 4>() = m.a_hat;
    abar.bottomLeftCorner<4, 4>() = m.a - m.a_hat + m.b;
    abar.bottomRightCorner<4, 4>() = m.a;
    EXPECT_LT((dec.abar0 + dec.atilde0 - abar).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Decomposition, StackedSystemGivesObserverAndErrorDerivatives) {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const Draw d = random_draw(rng);
    const auto dec = build_decomposition(d.p, d.q, d.k, d.anchors, d.x(kI), d.xh(kI));
    const auto aff = affine_vectors_and_bounds(d.p, d.q, d.k);
    const double v = vaccination_full(d.q, d.k, ObserverState<double>::fromVector(d.xh));
    Vector8d xbar;
    xbar << d.xh, d.x - d.xh;
    const Vector8d lhs = (dec.abar0 + dec.atilde0) * xbar + aff.b_bar;
    Vector8d rhs;
    rhs << observer_derivative(d.q, d.xh, v),
        seir_derivative(d.p, d.x, v) - observer_derivative(d.q, d.xh, v);
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-9 * (1.0 + rhs.cwiseAbs().maxCoeff()));
  }
}

TEST(Decomposition, ConstantPartsDoNotDependOnTheState) {
  const auto p = ref_params();
  const auto q = ref_observer();
  const DecompositionAnchors<double> a{300, 200, 0.1, -0.2};
  const auto d1 = build_decomposition(p, q, ref_gains(), a, 10.0, 20.0);
  const auto d2 = build_decomposition(p, q, ref_gains(), a, 700.0, 5.0);
  EXPECT_EQ(d1.abar0, d2.abar0);
  EXPECT_EQ(d1.b0(0, 0), 0.1);
  EXPECT_EQ(d1.b0(1, 0), -0.2);
}

TEST(Decomposition, AnchoredAtTheStateThePlantPerturbationIsOnlyInfection) {
  const auto p = ref_params();
  const auto q = ref_observer();
  const DecompositionAnchors<double> a{150, 150, 0, 0};
  const auto d = build_decomposition(p, q, ref_gains(), a, 150.0, 150.0);
  EXPECT_EQ(d.delta_a(0, 0), 0.0);
  EXPECT_NEAR(d.delta_a(1, 0), p.beta1() * 150.0, 1e-15);
  EXPECT_EQ(d.delta_a_hat(0, 0), 0.0);
  EXPECT_EQ(d.delta_a_hat(3, 0), 0.0);
}

TEST(AffineVectors, NormsAndBounds) {
  Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = rng.params();
    const auto q = rng.observer();
    ControlGains<double> k{};
    k.g = rng.uniform(0.0, q.mu_hat);
    const auto aff = affine_vectors_and_bounds(p, q, k);
    EXPECT_NEAR(aff.b_hat_norm, aff.b_hat.norm(), 1e-9 * (1 + aff.b_hat_norm));
    EXPECT_NEAR(aff.b_tilde_norm, aff.b_tilde.norm(), 1e-9 * (1 + aff.b_tilde_norm));
    EXPECT_LT((aff.b_tilde - (aff.b - aff.b_hat)).cwiseAbs().maxCoeff(), 1e-9 * (1 + aff.b_hat_norm));
    EXPECT_LE(aff.b_bar_norm, aff.b_bar_bound * (1 + 1e-12));
    EXPECT_LE(aff.b_bar_bound, aff.b_bar_bound_loose * (1 + 1e-12));
    EXPECT_EQ(aff.epsilon, aff.b_tilde_norm);
  }
}

TEST(AffineVectors, MatchedParametersHaveNoErrorForcing) {
  const auto aff = affine_vectors_and_bounds(ref_params(), ref_observer(), ref_gains());
  EXPECT_EQ(aff.b_tilde_norm, 0.0);
  // g = mu_hat: b_hat = (0, 0, 0, mu_hat N).
  EXPECT_NEAR(aff.b_hat_norm, 1000.0 / 235.0, 1e-12);
}

}  // namespace
}  // namespace seirvac
