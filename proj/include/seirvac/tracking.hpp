#ifndef SEIRVAC_TRACKING_HPP_
#define SEIRVAC_TRACKING_HPP_

#include <cmath>
#include <limits>
#include <stdexcept>

#include "seirvac/gains.hpp"
#include "seirvac/integrator.hpp"
#include "seirvac/observer.hpp"
#include "seirvac/system_matrices.hpp"

namespace seirvac {

// Time-varying g(t) that steers R_hat(t)/N towards 1. The candidate
//
//   g_bar(t) = (1 - y_num(t)) / y_den(t)
//   y_num(t) = int_0^t e4' exp(A_hat0 (t - tau)) (e1 mu_hat + f(tau)) dtau
//   y_den(t) = int_0^t e4' exp(A_hat0 (t - tau)) (e4 - e1) dtau
//
// is accepted while it lies in [0, g_max] (t <= T) or [0, mu_hat] (t > T);
// otherwise the last accepted value for the active range is held. Both
// convolutions are carried as states z' = A_hat0 z + forcing, z(0) = 0, with
// y = e4' z.

template <typename Scalar>
struct TrackingGainConfig {
  Scalar g_max{0};
  Scalar horizon_t{0};
  Scalar g_init{0};
};

template <typename Scalar>
void validate_tracking_config(const ObserverParams<Scalar>& q, const TrackingGainConfig<Scalar>& c) {
  if (!(q.mu_hat > Scalar(0))) throw std::invalid_argument("tracking: mu_hat must be > 0");
  if (!(c.g_max >= q.mu_hat)) throw std::invalid_argument("tracking: g_max must be >= mu_hat");
  if (!(c.horizon_t > Scalar(0))) throw std::invalid_argument("tracking: horizon_t must be > 0");
  if (!(c.g_init >= Scalar(0) && c.g_init <= q.mu_hat)) {
    throw std::invalid_argument("tracking: g_init must lie in [0, mu_hat]");
  }
}

template <typename Scalar>
struct TrackingGainState {
  Vector4<Scalar> z_num = Vector4<Scalar>::Zero();
  Vector4<Scalar> z_den = Vector4<Scalar>::Zero();
  // Last accepted value in [0, g_max] and in [0, mu_hat] respectively.
  Scalar last_feasible_g{0};
  Scalar last_feasible_time{0};
  Scalar last_narrow_g{0};
  Scalar last_narrow_time{0};

  static TrackingGainState initial(const TrackingGainConfig<Scalar>& c) {
    TrackingGainState st;
    st.last_feasible_g = c.g_init;
    st.last_narrow_g = c.g_init;
    return st;
  }
};

template <typename Scalar>
struct TrackingGainValue {
  Scalar g;
  Scalar g_bar;      // NaN while the denominator is degenerate
  bool accepted;     // g == g_bar
  bool degenerate;   // |y_den| < 1e-12
};

/// N^-1 dA_hat(t) v; only the first column of dA_hat is nonzero. `v` is the
/// observer state (default) or the observation error (comparison variant).
template <typename Scalar>
Vector4<Scalar> tracking_forcing(const ObserverParams<Scalar>& q, const ControlGains<Scalar>& k,
                                 Scalar i_hat_r, Scalar i_hat, const Vector4<Scalar>& v) {
  const Scalar b1h = q.beta1_hat();
  Vector4<Scalar> col((b1h + k.k5) * (i_hat_r - i_hat), b1h * i_hat, Scalar(0),
                      k.k5 * (i_hat - i_hat_r));
  return col * (v(0) / q.n_total);
}

/// Derivative of the stacked auxiliary state (z_num, z_den).
template <typename Scalar>
Vector8<Scalar> tracking_aux_derivative(const Matrix4<Scalar>& a_hat0, Scalar mu_hat,
                                        const Vector4<Scalar>& forcing,
                                        const Vector8<Scalar>& z) {
  Vector8<Scalar> dz;
  dz.template head<4>() = a_hat0 * z.template head<4>() + forcing;
  dz(0) += mu_hat;
  dz.template tail<4>() = a_hat0 * z.template tail<4>();
  dz(4) -= Scalar(1);
  dz(7) += Scalar(1);
  return dz;
}

/// Applies the clamp-or-hold rule at time t using the current auxiliary
/// states, updating the held values when the candidate is accepted.
template <typename Scalar>
TrackingGainValue<Scalar> tracking_gain_select(const ObserverParams<Scalar>& q,
                                               const TrackingGainConfig<Scalar>& cfg,
                                               TrackingGainState<Scalar>& st, Scalar t) {
  const Scalar y_den = st.z_den(kR);
  const Scalar y_num = st.z_num(kR);
  const bool late = t > cfg.horizon_t;
  auto held = [&] { return late ? st.last_narrow_g : st.last_feasible_g; };
  if (std::abs(y_den) < Scalar(1e-12)) {
    return {held(), std::numeric_limits<Scalar>::quiet_NaN(), false, true};
  }
  const Scalar g_bar = (Scalar(1) - y_num) / y_den;
  const Scalar upper = late ? q.mu_hat : cfg.g_max;
  if (g_bar >= Scalar(0) && g_bar <= upper) {
    st.last_feasible_g = g_bar;
    st.last_feasible_time = t;
    if (g_bar <= q.mu_hat) {
      st.last_narrow_g = g_bar;
      st.last_narrow_time = t;
    }
    return {g_bar, g_bar, true, false};
  }
  return {held(), g_bar, false, false};
}

/// Advances the auxiliary states from t to t + dt with RK4 and returns the
/// gain at t + dt. `forcing(tau)` yields N^-1 dA_hat(tau) x_hat(tau).
template <typename Scalar, typename Forcing>
TrackingGainValue<Scalar> tracking_gain_step(const ObserverParams<Scalar>& q,
                                             const TrackingGainConfig<Scalar>& cfg,
                                             TrackingGainState<Scalar>& st,
                                             const Matrix4<Scalar>& a_hat0, Forcing&& forcing,
                                             Scalar t, Scalar dt) {
  if (!(dt > Scalar(0))) throw std::invalid_argument("tracking_gain_step: dt must be > 0");
  Vector8<Scalar> z;
  z << st.z_num, st.z_den;
  z = rk4_step(
      [&](double tau, const Vector8<Scalar>& zz) {
        return tracking_aux_derivative<Scalar>(a_hat0, q.mu_hat, forcing(tau), zz);
      },
      z, t, dt);
  st.z_num = z.template head<4>();
  st.z_den = z.template tail<4>();
  return tracking_gain_select(q, cfg, st, t + dt);
}

}  // namespace seirvac

#endif  // SEIRVAC_TRACKING_HPP_
