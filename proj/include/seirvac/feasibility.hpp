#ifndef SEIRVAC_FEASIBILITY_HPP_
#define SEIRVAC_FEASIBILITY_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "seirvac/gains.hpp"
#include "seirvac/model.hpp"
#include "seirvac/observer.hpp"
#include "seirvac/spectral.hpp"
#include "seirvac/system_matrices.hpp"

namespace seirvac {

struct FeasibilityCondition {
  std::string name;
  std::string statement;
  // Empty when the inputs needed to evaluate it were not supplied.
  std::optional<bool> holds;
};

/// One row per named gain condition. Names are grouped by prefix:
/// "stability." d_hat Hurwitz, "box." sign boxes on the gains, "sandwich."
/// the affine bound on the law, "metzler." the observer constant matrix,
/// "observer_positivity." and "plant_positivity." invariance of the
/// nonnegative orthant, "k5_sign." the two readings of the k5 sign condition.
struct FeasibilityReport {
  std::vector<FeasibilityCondition> conditions;
  double sandwich_min = 0.0;
  double sandwich_max = 0.0;

  const FeasibilityCondition* find(const std::string& name) const {
    for (const auto& c : conditions)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool holds(const std::string& name) const {
    const auto* c = find(name);
    return c && c->holds.value_or(false);
  }
  /// True when every evaluated condition with this prefix holds.
  bool group_holds(const std::string& prefix) const {
    for (const auto& c : conditions) {
      if (c.name.rfind(prefix, 0) == 0 && c.holds.has_value() && !*c.holds) return false;
    }
    return true;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : conditions)
      if (c.holds.has_value() && !*c.holds) out.push_back(c.name);
    return out;
  }
  bool sign_boxes() const {
    for (const auto& c : conditions) {
      if (c.name.rfind("box.", 0) == 0 && !c.holds.value_or(true)) return false;
    }
    return true;
  }
};

namespace detail {

// Extremes of L = (k1 + k5 I) S + k2 E + k3 I + k4 R over the simplex
// S + E + I + R = N, all >= 0, with I restricted to [lo, hi]. For fixed I
// the remaining mass N - I goes entirely to the compartment with the
// extreme coefficient, leaving one-dimensional problems in I.
template <typename Scalar>
std::pair<Scalar, Scalar> sandwich_extremes(const ControlGains<Scalar>& k, Scalar n,
                                            Interval<Scalar> i_range) {
  const Scalar lo = std::max(Scalar(0), i_range.lo);
  const Scalar hi = std::min(n, i_range.hi);
  std::vector<Scalar> points{lo, hi};
  if (k.k5 != Scalar(0)) {
    const Scalar stationary = (k.k5 * n - k.k1 + k.k3) / (Scalar(2) * k.k5);
    if (stationary > lo && stationary < hi) points.push_back(stationary);
  }
  Scalar mn = std::numeric_limits<Scalar>::infinity();
  Scalar mx = -mn;
  for (Scalar i : points) {
    const Scalar rest = n - i;
    for (Scalar coef : {k.k1 + k.k5 * i, k.k2, k.k4}) {
      const Scalar v = coef * rest + k.k3 * i;
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
  }
  return {mn, mx};
}

}  // namespace detail

/// Evaluates the gain conditions for stability and positivity. `i_hat_range`
/// and `i_range` are a-priori bounds on I_hat(t) and I(t) over the run.
template <typename Scalar>
FeasibilityReport gain_feasibility(const ObserverParams<Scalar>& q,
                                   const std::optional<EpidemicParams<Scalar>>& p,
                                   const ControlGains<Scalar>& k,
                                   const DecompositionAnchors<Scalar>& anchors,
                                   Interval<Scalar> i_hat_range, Interval<Scalar> i_range) {
  FeasibilityReport rep;
  auto add = [&](std::string name, std::string statement, std::optional<bool> holds) {
    rep.conditions.push_back({std::move(name), std::move(statement), holds});
  };
  const Scalar b1h = q.beta1_hat();
  const Scalar ihr = anchors.i_hat_r;
  const Scalar n = q.n_total;

  add("stability.k4_below_mu_hat_plus_omega_hat", "k4 < mu_hat + omega_hat",
      k.k4 < q.mu_hat + q.omega_hat);
  add("stability.first_pole_positive", "mu_hat + k1 + (beta1_hat + k5) I_hat_r > 0",
      q.mu_hat + k.k1 + (b1h + k.k5) * ihr > Scalar(0));
  add("stability.mu_hat_plus_sigma_hat", "mu_hat + sigma_hat > 0", q.mu_hat + q.sigma_hat > Scalar(0));
  add("stability.mu_hat_plus_gamma_hat", "mu_hat + gamma_hat > 0", q.mu_hat + q.gamma_hat > Scalar(0));

  add("box.g_in_0_mu_hat", "0 <= g <= mu_hat", k.g >= Scalar(0) && k.g <= q.mu_hat);
  add("box.k2_nonpositive", "k2 <= 0", k.k2 <= Scalar(0));
  add("box.k3_in_minus_gamma_hat_0", "-gamma_hat <= k3 <= 0",
      k.k3 >= -q.gamma_hat && k.k3 <= Scalar(0));
  add("box.k4_in_0_omega_hat", "0 <= k4 <= omega_hat",
      k.k4 >= Scalar(0) && k.k4 <= q.omega_hat);
  add("box.k1_plus_k5_i_hat_r_nonnegative", "k1 + k5 I_hat_r >= 0",
      k.k1 + k.k5 * ihr >= Scalar(0));

  const auto [lmin, lmax] = detail::sandwich_extremes(k, n, i_hat_range);
  rep.sandwich_min = static_cast<double>(lmin);
  rep.sandwich_max = static_cast<double>(lmax);
  add("sandwich.upper", "max (k1 + k5 I)S + k2 E + k3 I + k4 R <= (mu_hat - g) N",
      lmax <= (q.mu_hat - k.g) * n);
  add("sandwich.lower", "min (k1 + k5 I)S + k2 E + k3 I + k4 R >= -g N",
      lmin >= -k.g * n);

  // Off-diagonal (1,2) is -k2 and (4,2) is k2, so this forces k2 = 0.
  add("metzler.a_hat0", "A_hat0 is Metzler (requires k2 = 0)",
      metzler_check(constant_observer_matrix(q, k, ihr)).is_metzler);

  add("observer_positivity.upper", "(beta1_hat + k5)(I_hat_r - max I_hat) >= 0",
      (b1h + k.k5) * (ihr - i_hat_range.hi) >= Scalar(0));
  add("observer_positivity.lower", "k5 (min I_hat - I_hat_r) >= 0", k.k5 * (i_hat_range.lo - ihr) >= Scalar(0));

  add("plant_positivity.g_in_0_mu_hat", "0 <= g <= mu_hat", k.g >= Scalar(0) && k.g <= q.mu_hat);
  std::optional<bool> rates;
  if (p) rates = std::min({p->sigma, p->omega, p->gamma}) >= Scalar(0);
  add("plant_positivity.rates_nonnegative", "min(sigma, omega, gamma) >= 0", rates);
  add("plant_positivity.i_r_covers_max_i", "I_r >= max I", anchors.i_r >= i_range.hi);

  std::optional<bool> nonpositive_reading;
  if (p) {
    Scalar lower = -p->beta1();
    if (k.k1 > Scalar(0)) lower = std::max(lower, -anchors.i_r / k.k1);
    nonpositive_reading = k.k5 <= Scalar(0) && k.k5 >= lower;
  }
  add("k5_sign.nonpositive_reading", "0 >= k5 >= max(-beta1, -I_r / k1)", nonpositive_reading);
  add("k5_sign.nonnegative_reading", "k5 >= 0", k.k5 >= Scalar(0));
  return rep;
}

}  // namespace seirvac

#endif  // SEIRVAC_FEASIBILITY_HPP_
