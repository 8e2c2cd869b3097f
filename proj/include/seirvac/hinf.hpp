#ifndef SEIRVAC_HINF_HPP_
#define SEIRVAC_HINF_HPP_

#include <cmath>
#include <complex>
#include <stdexcept>

#include "seirvac/gains.hpp"
#include "seirvac/model.hpp"
#include "seirvac/observer.hpp"
#include "seirvac/polynomial.hpp"

namespace seirvac {

/// d(s) = (s + mu + beta1 I_r)(s + mu + sigma)(s + mu + gamma)(s + mu + omega)
template <typename Scalar>
Polynomial<Scalar> plant_denominator(const EpidemicParams<Scalar>& p, Scalar i_r) {
  return Polynomial<Scalar>::fromRoots({-(p.mu + p.beta1() * i_r), -(p.mu + p.sigma),
                                        -(p.mu + p.gamma), -(p.mu + p.omega)});
}

/// d_hat(s) = (s + mu_hat + k1 + (beta1_hat + k5) I_hat_r)(s + mu_hat + sigma_hat)
///            (s + mu_hat + gamma_hat)(s + mu_hat + omega_hat - k4)
template <typename Scalar>
Polynomial<Scalar> observer_denominator(const ObserverParams<Scalar>& q,
                                        const ControlGains<Scalar>& k, Scalar i_hat_r) {
  return Polynomial<Scalar>::fromRoots(
      {-(q.mu_hat + k.k1 + (q.beta1_hat() + k.k5) * i_hat_r), -(q.mu_hat + q.sigma_hat),
       -(q.mu_hat + q.gamma_hat), -(q.mu_hat + q.omega_hat - k.k4)});
}

/// n_hat(s) = (k4 - omega_hat)(s + mu_hat + sigma_hat)(s + mu_hat + gamma_hat)
template <typename Scalar>
Polynomial<Scalar> observer_numerator(const ObserverParams<Scalar>& q,
                                      const ControlGains<Scalar>& k) {
  return (k.k4 - q.omega_hat) *
         Polynomial<Scalar>::fromRoots({-(q.mu_hat + q.sigma_hat), -(q.mu_hat + q.gamma_hat)});
}

struct HinfOptions {
  double omega_min = 1e-6;
  double omega_max = 1e6;
  int grid_points = 4001;
  bool refine = true;
};

template <typename Scalar>
struct HinfResult {
  Scalar value;
  Scalar peak_frequency;
};

/// sup over omega >= 0 of |num(i omega) / den(i omega)| on a logarithmic grid
/// (plus omega = 0), refined by golden-section search around the grid peak.
template <typename Scalar>
HinfResult<Scalar> hinf_norm(const Polynomial<Scalar>& num, const Polynomial<Scalar>& den,
                             const HinfOptions& opt = {}) {
  if (!hurwitz_check(den)) {
    throw std::domain_error("hinf_norm: denominator is not Hurwitz");
  }
  if (num.isZero()) return {Scalar(0), Scalar(0)};
  using Complex = std::complex<Scalar>;
  auto gain = [&](Scalar w) { return std::abs(num(Complex(0, w)) / den(Complex(0, w))); };

  const Scalar log_lo = std::log10(Scalar(opt.omega_min));
  const Scalar log_hi = std::log10(Scalar(opt.omega_max));
  const int n = opt.grid_points;
  auto grid = [&](int k) {
    return std::pow(Scalar(10), log_lo + (log_hi - log_lo) * Scalar(k) / Scalar(n - 1));
  };

  HinfResult<Scalar> best{gain(Scalar(0)), Scalar(0)};
  int best_k = -1;
  for (int k = 0; k < n; ++k) {
    const Scalar w = grid(k);
    const Scalar v = gain(w);
    if (v > best.value) {
      best = {v, w};
      best_k = k;
    }
  }
  if (!opt.refine || best_k < 0) return best;

  // Golden-section on log10(omega) between the neighbours of the grid peak.
  Scalar a = std::log10(grid(std::max(best_k - 1, 0)));
  Scalar b = std::log10(grid(std::min(best_k + 1, n - 1)));
  const Scalar inv_phi = (std::sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
  auto f = [&](Scalar x) { return gain(std::pow(Scalar(10), x)); };
  Scalar c = b - inv_phi * (b - a);
  Scalar d = a + inv_phi * (b - a);
  Scalar fc = f(c), fd = f(d);
  for (int it = 0; it < 100 && (b - a) > Scalar(1e-12); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const Scalar x = (a + b) / Scalar(2);
  const Scalar v = f(x);
  if (v > best.value) best = {v, std::pow(Scalar(10), x)};
  return best;
}

/// H-infinity norm of h_hat(s) = (k1 + k5 I_hat_r) n_hat(s) / d_hat(s).
/// Throws std::domain_error when d_hat is not Hurwitz.
template <typename Scalar>
HinfResult<Scalar> hinf_norm_hhat(const ObserverParams<Scalar>& q, const ControlGains<Scalar>& k,
                                  const DecompositionAnchors<Scalar>& anchors,
                                  const HinfOptions& opt = {}) {
  const Polynomial<Scalar> den = observer_denominator(q, k, anchors.i_hat_r);
  if (!hurwitz_check(den)) {
    throw std::domain_error("hinf_norm_hhat: d_hat(s) is not Hurwitz");
  }
  const Scalar c = k.k1 + k.k5 * anchors.i_hat_r;
  if (c == Scalar(0) || k.k4 == q.omega_hat) return {Scalar(0), Scalar(0)};
  HinfResult<Scalar> r = hinf_norm(observer_numerator(q, k), den, opt);
  r.value *= std::abs(c);
  return r;
}

}  // namespace seirvac

#endif  // SEIRVAC_HINF_HPP_
