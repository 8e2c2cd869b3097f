#ifndef SEIRVAC_OBSERVER_HPP_
#define SEIRVAC_OBSERVER_HPP_

#include "seirvac/model.hpp"

namespace seirvac {

/// Estimated rate constants. They are fixed for the lifetime of the
/// observer; `n_total` is the plant's (known) total population.
template <typename Scalar>
struct ObserverParams {
  Scalar mu_hat{0};
  Scalar omega_hat{0};
  Scalar beta_hat{0};
  Scalar sigma_hat{0};
  Scalar gamma_hat{0};
  Scalar n_total{1};

  Scalar beta1_hat() const { return beta_hat / n_total; }

  static ObserverParams matching(const EpidemicParams<Scalar>& p) {
    return {p.mu, p.omega, p.beta, p.sigma, p.gamma, p.n_total};
  }
  EpidemicParams<Scalar> asEpidemicParams() const {
    return {mu_hat, omega_hat, beta_hat, sigma_hat, gamma_hat, n_total};
  }
};

template <typename Scalar>
ValidationReport validate_params(const ObserverParams<Scalar>& q) {
  ValidationReport report;
  detail::check_rate(report, "mu_hat", q.mu_hat);
  detail::check_rate(report, "omega_hat", q.omega_hat);
  detail::check_rate(report, "beta_hat", q.beta_hat);
  detail::check_rate(report, "sigma_hat", q.sigma_hat);
  detail::check_rate(report, "gamma_hat", q.gamma_hat);
  detail::check_total(report, q.n_total);
  if (q.mu_hat == Scalar(0)) {
    report.issues.push_back("mu_hat==0");
  }
  return report;
}

/// Open-loop copy of the plant driven by the same vaccination signal.
/// There is no output-injection term.
template <typename Scalar>
Vector4<Scalar> observer_derivative(const ObserverParams<Scalar>& q, const Vector4<Scalar>& xh,
                                    Scalar v) {
  return detail::seir_rhs(q.mu_hat, q.omega_hat, q.beta_hat, q.sigma_hat, q.gamma_hat, q.n_total,
                          xh, v);
}

template <typename Scalar>
ObserverState<Scalar> observer_derivative(const ObserverParams<Scalar>& q,
                                          const ObserverState<Scalar>& xh, Scalar v) {
  return ObserverState<Scalar>::fromVector(observer_derivative(q, xh.vec(), v));
}

template <typename Scalar>
struct ObservationError {
  Vector4<Scalar> error;
  Scalar norm;
};

/// x - x_hat and its Euclidean norm.
template <typename Scalar>
ObservationError<Scalar> observation_error(const PopulationState<Scalar>& x,
                                           const ObserverState<Scalar>& xh) {
  Vector4<Scalar> err = x.vec() - xh.vec();
  return {err, err.norm()};
}

}  // namespace seirvac

#endif  // SEIRVAC_OBSERVER_HPP_
