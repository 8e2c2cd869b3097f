#ifndef SEIRVAC_SYSTEM_MATRICES_HPP_
#define SEIRVAC_SYSTEM_MATRICES_HPP_

#include <cmath>

#include "seirvac/gains.hpp"
#include "seirvac/model.hpp"
#include "seirvac/observer.hpp"

namespace seirvac {

// Substituting the vaccination law into plant and observer gives
//   x_hat' = A_hat(t) x_hat + b_hat
//   x'     = A(t) x + B(t) x_hat + b
// with the matrices depending on time only through I(t) and I_hat(t).

template <typename Scalar>
struct SystemMatrices {
  Matrix4<Scalar> a;      // plant, A(t)
  Matrix4<Scalar> a_hat;  // closed-loop observer, A_hat(t)
  Matrix4<Scalar> b;      // plant coupling to the observer state, B(t)
};

namespace detail {

template <typename Scalar>
void require_mu_hat(const ObserverParams<Scalar>& q) {
  if (q.mu_hat == Scalar(0)) {
    throw std::domain_error("mu_hat must be nonzero");
  }
}

template <typename Scalar>
Matrix4<Scalar> plant_matrix(const EpidemicParams<Scalar>& p, Scalar infectious) {
  const Scalar b1i = p.beta1() * infectious;
  Matrix4<Scalar> m = Matrix4<Scalar>::Zero();
  // clang-format off
  m << -(p.mu + b1i), 0,               0,               p.omega,
       b1i,           -(p.mu + p.sigma), 0,             0,
       0,             p.sigma,         -(p.mu + p.gamma), 0,
       0,             0,               p.gamma,         -(p.mu + p.omega);
  // clang-format on
  return m;
}

template <typename Scalar>
Matrix4<Scalar> observer_matrix(const ObserverParams<Scalar>& q, const ControlGains<Scalar>& k,
                                Scalar i_hat, Scalar i_first_column) {
  // `i_hat` enters the infection entry (2,1); `i_first_column` the gain terms
  // of column 1. They coincide for A_hat(t); the constant part splits them.
  const Scalar c = k.k1 + k.k5 * i_first_column;
  Matrix4<Scalar> m;
  // clang-format off
  m << -(q.mu_hat + k.k1 + (q.beta1_hat() + k.k5) * i_first_column), -k.k2, -k.k3, q.omega_hat - k.k4,
       q.beta1_hat() * i_hat, -(q.mu_hat + q.sigma_hat), 0,                           0,
       0,                     q.sigma_hat,               -(q.mu_hat + q.gamma_hat),   0,
       c,                     k.k2,                      q.gamma_hat + k.k3,          -(q.mu_hat + q.omega_hat - k.k4);
  // clang-format on
  return m;
}

}  // namespace detail

/// A(t), A_hat(t) and B(t) with I(t) = i_true and I_hat(t) = i_hat.
template <typename Scalar>
SystemMatrices<Scalar> build_system_matrices(const EpidemicParams<Scalar>& p,
                                             const ObserverParams<Scalar>& q,
                                             const ControlGains<Scalar>& k, Scalar i_true,
                                             Scalar i_hat) {
  detail::require_mu_hat(q);
  SystemMatrices<Scalar> out;
  out.a = detail::plant_matrix(p, i_true);
  out.a_hat = detail::observer_matrix(q, k, i_hat, i_hat);

  const Scalar c = k.k1 + k.k5 * i_hat;
  Matrix4<Scalar> coupling = Matrix4<Scalar>::Zero();
  coupling.row(0) << -c, -k.k2, -k.k3, -k.k4;
  coupling.row(3) << c, k.k2, k.k3, k.k4;
  out.b = (p.mu / q.mu_hat) * coupling;
  return out;
}

/// Constant-plus-perturbation split of the plant, observer and coupling
/// matrices and of the stacked 8x8 system on (x_hat, x - x_hat).
template <typename Scalar>
struct Decomposition {
  Matrix4<Scalar> a0, a_hat0, b0;
  Matrix4<Scalar> delta_a, delta_a_hat, delta_b;
  Matrix8<Scalar> abar0;
  Matrix8<Scalar> atilde0;
};

template <typename Scalar>
Matrix8<Scalar> block_lower_triangular(const Matrix4<Scalar>& top_left,
                                       const Matrix4<Scalar>& bottom_left,
                                       const Matrix4<Scalar>& bottom_right) {
  Matrix8<Scalar> m = Matrix8<Scalar>::Zero();
  m.template topLeftCorner<4, 4>() = top_left;
  m.template bottomLeftCorner<4, 4>() = bottom_left;
  m.template bottomRightCorner<4, 4>() = bottom_right;
  return m;
}

template <typename Scalar>
Matrix4<Scalar> constant_plant_matrix(const EpidemicParams<Scalar>& p, Scalar i_r) {
  Matrix4<Scalar> m = detail::plant_matrix(p, i_r);
  m(1, 0) = Scalar(0);
  return m;
}

template <typename Scalar>
Matrix4<Scalar> constant_observer_matrix(const ObserverParams<Scalar>& q,
                                         const ControlGains<Scalar>& k, Scalar i_hat_r) {
  return detail::observer_matrix(q, k, Scalar(0), i_hat_r);
}

/// The perturbation blocks are written out in closed form (not as
/// differences), so the reconstruction identities are a genuine check.
template <typename Scalar>
Decomposition<Scalar> build_decomposition(const EpidemicParams<Scalar>& p,
                                          const ObserverParams<Scalar>& q,
                                          const ControlGains<Scalar>& k,
                                          const DecompositionAnchors<Scalar>& anchors,
                                          Scalar i_true, Scalar i_hat) {
  detail::require_mu_hat(q);
  Decomposition<Scalar> d;
  const Scalar b1 = p.beta1();
  const Scalar b1h = q.beta1_hat();
  const Scalar ir = anchors.i_r;
  const Scalar ihr = anchors.i_hat_r;

  d.a0 = constant_plant_matrix(p, ir);
  d.delta_a = Matrix4<Scalar>::Zero();
  d.delta_a(0, 0) = b1 * (ir - i_true);
  d.delta_a(1, 0) = b1 * i_true;

  d.a_hat0 = constant_observer_matrix(q, k, ihr);
  d.delta_a_hat = Matrix4<Scalar>::Zero();
  d.delta_a_hat(0, 0) = (b1h + k.k5) * (ihr - i_hat);
  d.delta_a_hat(1, 0) = b1h * i_hat;
  d.delta_a_hat(3, 0) = k.k5 * (i_hat - ihr);

  d.b0 = Matrix4<Scalar>::Zero();
  d.b0(0, 0) = anchors.b011;
  d.b0(1, 0) = anchors.b021;

  const Scalar m = Scalar(1) - p.mu / q.mu_hat;
  const Scalar c = k.k1 + k.k5 * i_hat;
  Matrix4<Scalar>& db = d.delta_b;
  db.setZero();
  db(0, 0) = q.mu_hat - p.mu + b1h * i_hat - b1 * i_true + m * c - anchors.b011;
  db(0, 1) = m * k.k2;
  db(0, 2) = m * k.k3;
  db(0, 3) = p.omega - q.omega_hat + m * k.k4;
  db(1, 0) = b1 * i_true - b1h * i_hat - anchors.b021;
  db(1, 1) = q.mu_hat - p.mu + q.sigma_hat - p.sigma;
  db(2, 1) = p.sigma - q.sigma_hat;
  db(2, 2) = q.mu_hat + q.gamma_hat - p.mu - p.gamma;
  db(3, 0) = -m * c;
  db(3, 1) = -m * k.k2;
  db(3, 2) = p.gamma - q.gamma_hat - m * k.k3;
  db(3, 3) = q.mu_hat + q.omega_hat - p.mu - p.omega - m * k.k4;

  d.abar0 = block_lower_triangular(d.a_hat0, d.b0, d.a0);
  d.atilde0 = block_lower_triangular(d.delta_a_hat, d.delta_b, d.delta_a);
  return d;
}

/// Constant forcing terms of the observer (b_hat), the plant (b), their
/// difference and the stacked 8-vector, plus the norm bounds on b_bar.
template <typename Scalar>
struct AffineVectors {
  Vector4<Scalar> b;
  Vector4<Scalar> b_hat;
  Vector4<Scalar> b_tilde;
  Vector8<Scalar> b_bar;

  Scalar b_hat_norm;
  Scalar b_tilde_norm;
  Scalar b_bar_norm;
  // (mu_hat + |mu - mu_hat|) N / mu_hat * sqrt((mu_hat - 2g) mu_hat + 2 g^2)
  Scalar b_bar_bound;
  // Same with (2 mu_hat + mu) in place of (mu_hat + |mu - mu_hat|).
  Scalar b_bar_bound_loose;
  // Smallest epsilon for which the parametric-error condition holds; equals
  // the norm of b_tilde.
  Scalar epsilon;
};

template <typename Scalar>
AffineVectors<Scalar> affine_vectors_and_bounds(const EpidemicParams<Scalar>& p,
                                                const ObserverParams<Scalar>& q,
                                                const ControlGains<Scalar>& k) {
  detail::require_mu_hat(q);
  using std::abs;
  using std::sqrt;
  const Scalar n = q.n_total;
  const Scalar g = k.g;
  AffineVectors<Scalar> out;
  out.b_hat << (q.mu_hat - g) * n, 0, 0, g * n;
  out.b << (Scalar(1) - g / q.mu_hat) * p.mu * n, 0, 0, g * p.mu * n / q.mu_hat;
  out.b_tilde = (p.mu / q.mu_hat - Scalar(1)) * n * Vector4<Scalar>(q.mu_hat - g, 0, 0, g);
  out.b_bar << out.b_hat, out.b_tilde;

  const Scalar root = sqrt((q.mu_hat - Scalar(2) * g) * q.mu_hat + Scalar(2) * g * g);
  const Scalar root_alt = sqrt((q.mu_hat - g) * (q.mu_hat - g) + g * g);
  // Two expansions of the same quantity; a mismatch means a broken build.
  if (abs(root - root_alt) > Scalar(1e-12) * (abs(q.mu_hat) + abs(g))) {
    throw std::logic_error("affine_vectors_and_bounds: norm identity violated");
  }
  out.b_hat_norm = n * root;
  out.b_tilde_norm = abs(p.mu - q.mu_hat) * n / q.mu_hat * root;
  out.b_bar_norm = out.b_bar.norm();
  out.b_bar_bound = (q.mu_hat + abs(p.mu - q.mu_hat)) * n / q.mu_hat * root;
  out.b_bar_bound_loose = (Scalar(2) * q.mu_hat + p.mu) * n / q.mu_hat * root;
  out.epsilon = out.b_tilde_norm;
  return out;
}

}  // namespace seirvac

#endif  // SEIRVAC_SYSTEM_MATRICES_HPP_
