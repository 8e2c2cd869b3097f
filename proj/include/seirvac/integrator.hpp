#ifndef SEIRVAC_INTEGRATOR_HPP_
#define SEIRVAC_INTEGRATOR_HPP_

#include <string>

#include <Eigen/Dense>

#include "seirvac/types.hpp"

namespace seirvac {

namespace detail {

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& v, double t) {
  if (!v.allFinite()) {
    throw NumericalAbort("non-finite derivative at t=" + std::to_string(t), t);
  }
}

}  // namespace detail

/// Classical four-stage Runge-Kutta step of x' = f(t, x).
/// Throws NumericalAbort if any stage derivative is not finite.
template <typename Vec, typename F>
Vec rk4_step(F&& f, const Vec& x, double t, double dt) {
  const double half = 0.5 * dt;
  const Vec k1 = f(t, x);
  detail::require_finite(k1, t);
  const Vec k2 = f(t + half, Vec(x + half * k1));
  detail::require_finite(k2, t + half);
  const Vec k3 = f(t + half, Vec(x + half * k2));
  detail::require_finite(k3, t + half);
  const Vec k4 = f(t + dt, Vec(x + dt * k3));
  detail::require_finite(k4, t + dt);
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace seirvac

#endif  // SEIRVAC_INTEGRATOR_HPP_
