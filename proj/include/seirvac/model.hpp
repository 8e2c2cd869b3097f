#ifndef SEIRVAC_MODEL_HPP_
#define SEIRVAC_MODEL_HPP_

#include <string>
#include <vector>

#include "seirvac/types.hpp"

namespace seirvac {

/// Rate constants of the true-mass-action SEIR plant, per day. `mu` is both
/// the birth and the death rate, which is what keeps the total at `n_total`.
template <typename Scalar>
struct EpidemicParams {
  Scalar mu{0};
  Scalar omega{0};
  Scalar beta{0};
  Scalar sigma{0};
  Scalar gamma{0};
  Scalar n_total{1};

  Scalar beta1() const { return beta / n_total; }
};

/// One entry per violated condition; empty means valid.
struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

namespace detail {

template <typename Scalar>
void check_rate(ValidationReport& report, const char* name, Scalar value) {
  if (!std::isfinite(value)) {
    report.issues.push_back(std::string(name) + " is not finite");
  } else if (value < Scalar(0)) {
    report.issues.push_back(std::string(name) + "<0");
  }
}

template <typename Scalar>
void check_total(ValidationReport& report, Scalar n) {
  if (!std::isfinite(n)) {
    report.issues.push_back("n_total is not finite");
  } else if (n <= Scalar(0)) {
    report.issues.push_back("n_total<=0");
  }
}

}  // namespace detail

template <typename Scalar>
ValidationReport validate_params(const EpidemicParams<Scalar>& p) {
  ValidationReport report;
  detail::check_rate(report, "mu", p.mu);
  detail::check_rate(report, "omega", p.omega);
  detail::check_rate(report, "beta", p.beta);
  detail::check_rate(report, "sigma", p.sigma);
  detail::check_rate(report, "gamma", p.gamma);
  detail::check_total(report, p.n_total);
  return report;
}

namespace detail {

// Right-hand side shared by the plant and the observer; both are the same
// model evaluated with different rate constants.
template <typename Scalar>
Vector4<Scalar> seir_rhs(Scalar mu, Scalar omega, Scalar beta, Scalar sigma, Scalar gamma,
                         Scalar n, const Vector4<Scalar>& x, Scalar v) {
  const Scalar incidence = beta * x(kS) * x(kI) / n;
  Vector4<Scalar> dx;
  dx(kS) = -mu * x(kS) + omega * x(kR) - incidence + mu * n * (Scalar(1) - v);
  dx(kE) = incidence - (mu + sigma) * x(kE);
  dx(kI) = -(mu + gamma) * x(kI) + sigma * x(kE);
  dx(kR) = -(mu + omega) * x(kR) + gamma * x(kI) + mu * n * v;
  return dx;
}

}  // namespace detail

/// Time derivative of the plant. `v` is not clamped here.
template <typename Scalar>
Vector4<Scalar> seir_derivative(const EpidemicParams<Scalar>& p, const Vector4<Scalar>& x,
                                Scalar v) {
  return detail::seir_rhs(p.mu, p.omega, p.beta, p.sigma, p.gamma, p.n_total, x, v);
}

template <typename Scalar>
PopulationState<Scalar> seir_derivative(const EpidemicParams<Scalar>& p,
                                        const PopulationState<Scalar>& x, Scalar v) {
  return PopulationState<Scalar>::fromVector(seir_derivative(p, x.vec(), v));
}

/// Infection-free fixed point (E = I = 0) under a constant vaccination
/// fraction: R = mu*N*v/(mu+omega), S = N - R.
template <typename Scalar>
PopulationState<Scalar> forced_equilibrium(const EpidemicParams<Scalar>& p, Scalar v_const) {
  const Scalar denom = p.mu + p.omega;
  if (denom == Scalar(0)) {
    if (v_const != Scalar(0)) {
      throw std::domain_error("forced_equilibrium: mu + omega = 0 with nonzero vaccination");
    }
    return {p.n_total, Scalar(0), Scalar(0), Scalar(0)};
  }
  const Scalar r = p.mu * p.n_total * v_const / denom;
  return {p.n_total - r, Scalar(0), Scalar(0), r};
}

}  // namespace seirvac

#endif  // SEIRVAC_MODEL_HPP_
