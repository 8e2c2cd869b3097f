#ifndef SEIRVAC_VACCINATION_HPP_
#define SEIRVAC_VACCINATION_HPP_

#include "seirvac/gains.hpp"
#include "seirvac/observer.hpp"

namespace seirvac {

namespace detail {

template <typename Scalar>
Scalar vaccination_scale(const ObserverParams<Scalar>& q) {
  const Scalar scale = q.mu_hat * q.n_total;
  if (scale == Scalar(0)) {
    throw std::domain_error("vaccination law: mu_hat * N must be nonzero");
  }
  return scale;
}

}  // namespace detail

/// V = (k1 S + k2 E + k3 I + k4 R + k5 S I + g N) / (mu_hat N), unclamped.
template <typename Scalar>
Scalar vaccination_full(const ObserverParams<Scalar>& q, const ControlGains<Scalar>& k,
                        const ObserverState<Scalar>& xh) {
  const Scalar scale = detail::vaccination_scale(q);
  return (k.k1 * xh.s + k.k2 * xh.e + k.k3 * xh.i + k.k4 * xh.r + k.k5 * xh.s * xh.i +
          k.g * q.n_total) /
         scale;
}

/// Full law without the k2 E term.
template <typename Scalar>
Scalar vaccination_restricted(const ObserverParams<Scalar>& q, const ControlGains<Scalar>& k,
                              const ObserverState<Scalar>& xh) {
  const Scalar scale = detail::vaccination_scale(q);
  return (k.k1 * xh.s + k.k3 * xh.i + k.k4 * xh.r + k.k5 * xh.s * xh.i + k.g * q.n_total) / scale;
}

enum class SwitchBranch { kMain, kFallback };

template <typename Scalar>
struct SwitchedVaccination {
  Scalar value;
  SwitchBranch branch;
};

/// Returns the full law when it lies in [0, 1]; otherwise the fallback
/// (k1 S + k4 R + k5 S I + g N) / (mu_hat N). The fallback is not clamped.
template <typename Scalar>
SwitchedVaccination<Scalar> vaccination_switched(const ObserverParams<Scalar>& q,
                                                 const ControlGains<Scalar>& k,
                                                 const ObserverState<Scalar>& xh) {
  const Scalar v_bar = vaccination_full(q, k, xh);
  if (v_bar >= Scalar(0) && v_bar <= Scalar(1)) {
    return {v_bar, SwitchBranch::kMain};
  }
  const Scalar scale = detail::vaccination_scale(q);
  const Scalar fallback =
      (k.k1 * xh.s + k.k4 * xh.r + k.k5 * xh.s * xh.i + k.g * q.n_total) / scale;
  return {fallback, SwitchBranch::kFallback};
}

}  // namespace seirvac

#endif  // SEIRVAC_VACCINATION_HPP_
