#include "seirvac/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "seirvac/spectral.hpp"

namespace seirvac {

double transient_envelope(double k0, double rho0, double x0_norm, double forcing_norm, double t) {
  const double decay = std::exp(-rho0 * t);
  // int_0^t e^{rho0 tau} dtau * e^{-rho0 t} = (1 - e^{-rho0 t}) / rho0
  const double forced = rho0 == 0.0 ? t : -std::expm1(-rho0 * t) / rho0;
  return k0 * (decay * x0_norm + forcing_norm * forced);
}

double transient_envelope_limit(double k0, double rho0, double forcing_norm) {
  if (!(rho0 > 0.0)) return std::numeric_limits<double>::infinity();
  return k0 * forcing_norm / rho0;
}

double estimate_k0(const Matrix8d& abar0, double rho0, const CertifyOptions& opt) {
  double best = 1.0;
  const double lo = std::log10(opt.k0_t_min);
  const double hi = std::log10(opt.k0_t_max);
  for (int k = 0; k < opt.k0_points; ++k) {
    const double t = std::pow(10.0, lo + (hi - lo) * k / (opt.k0_points - 1));
    const double nrm = spectral_norm(matrix_exponential(abar0, t));
    if (!(nrm > 0.0) || !std::isfinite(nrm)) continue;
    const double v = std::exp(std::log(nrm) + rho0 * t);
    if (std::isfinite(v)) best = std::max(best, v);
  }
  return best * opt.k0_safety;
}

Assertion3Result fit_window_integrals(const std::vector<double>& times,
                                      const std::vector<double>& norms, double rho,
                                      const CertifyOptions& opt) {
  Assertion3Result out;
  out.window = opt.window;
  out.threshold = opt.alpha0_fraction * rho;
  const double sup = norms.empty() ? 0.0 : *std::max_element(norms.begin(), norms.end());

  // Cumulative trapezoid integral.
  std::vector<double> cum(times.size(), 0.0);
  for (std::size_t k = 1; k < times.size(); ++k) {
    cum[k] = cum[k - 1] + 0.5 * (norms[k] + norms[k - 1]) * (times[k] - times[k - 1]);
  }

  std::vector<double> lengths, worst;
  for (double factor : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double len = factor * opt.window;
    double w = -1.0;
    std::size_t end = 0;
    // Sample times carry rounding; a window may end 1e-9 len early.
    const double slack = 1e-9 * len;
    for (std::size_t a = 0; a < times.size(); ++a) {
      end = std::max(end, a);
      while (end < times.size() && times[end] < times[a] + len - slack) ++end;
      if (end >= times.size()) break;
      w = std::max(w, cum[end] - cum[a]);
    }
    if (w >= 0.0) {
      lengths.push_back(len);
      worst.push_back(w);
    }
  }

  if (lengths.size() < 2) {
    out.alpha0 = sup;
    out.alpha1 = 0.0;
  } else {
    const double n = static_cast<double>(lengths.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
      sx += lengths[j];
      sy += worst[j];
      sxx += lengths[j] * lengths[j];
      sxy += lengths[j] * worst[j];
    }
    out.alpha0 = std::max(0.0, (n * sxy - sx * sy) / (n * sxx - sx * sx));
    double a1 = 0.0;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
      a1 = std::max(a1, worst[j] - out.alpha0 * lengths[j]);
    }
    out.alpha1 = a1;
  }
  out.verdict = rho > 0.0 && out.alpha0 < out.threshold;
  return out;
}

ExtendedCertificate certify_extended(const Matrix8d& abar0, const std::vector<double>& times,
                                     const std::vector<Matrix8d>& perturbations,
                                     const CertifyOptions& opt) {
  ExtendedCertificate c;
  c.abscissa = stability_abscissa(abar0);
  c.rho = -c.abscissa;
  c.abar0_stable = c.abscissa < 0.0;
  std::vector<double> norms;
  norms.reserve(perturbations.size());
  for (const auto& m : perturbations) norms.push_back(spectral_norm(m));
  c.sup_delta_norm = norms.empty() ? 0.0 : *std::max_element(norms.begin(), norms.end());
  c.rho0 = c.rho - c.sup_delta_norm;
  c.assertion2 = c.abar0_stable && c.rho > c.sup_delta_norm;
  c.assertion3 = fit_window_integrals(times, norms, c.rho, opt);
  c.assertion3.verdict = c.assertion3.verdict && c.abar0_stable;
  c.k0 = estimate_k0(abar0, c.rho0, opt);
  return c;
}

namespace {

StabilityReport certify_common(const EpidemicParams<double>& p, const ObserverParams<double>& q,
                               const ControlGains<double>& k,
                               const DecompositionAnchors<double>& anchors,
                               const RangeBounds& ranges, const std::vector<double>& times,
                               const std::vector<std::pair<double, double>>& points,
                               const CertifyOptions& opt) {
  StabilityReport r;

  const Matrix4d a0 = constant_plant_matrix(p, anchors.i_r);
  const Matrix4d a_hat0 = constant_observer_matrix(q, k, anchors.i_hat_r);
  r.metzler_a0 = metzler_check(a0).is_metzler;
  const MetzlerResult mh = metzler_check(a_hat0);
  r.metzler_a_hat0 = mh.is_metzler;
  r.a_hat0_metzler_violations = mh.violations;

  const RealPolynomial d = plant_denominator(p, anchors.i_r);
  const RealPolynomial d_hat = observer_denominator(q, k, anchors.i_hat_r);
  const RealPolynomial char_a_hat0 = characteristic_polynomial(a_hat0);
  const RealPolynomial char_a0 = characteristic_polynomial(a0);
  r.hurwitz_d = hurwitz_check(d);
  r.hurwitz_d_hat = hurwitz_check(d_hat);
  r.hurwitz_char_a_hat0 = hurwitz_check(char_a_hat0);
  double diff = 0.0, scale = 0.0;
  for (int j = 0; j <= 4; ++j) {
    diff = std::max(diff, std::abs(d[j] - char_a0[j]));
    scale = std::max(scale, std::abs(d[j]));
  }
  r.d_char_a0_max_coeff_diff = diff;
  r.d_matches_char_a0 = diff <= 1e-10 * std::max(1.0, scale);

  if (r.hurwitz_d_hat) {
    const auto h = hinf_norm_hhat(q, k, anchors, opt.hinf);
    r.hinf_defined = true;
    r.hinf_norm = h.value;
    r.hinf_peak_frequency = h.peak_frequency;
  } else {
    r.hinf_norm = std::numeric_limits<double>::infinity();
  }

  r.feasibility = gain_feasibility<double>(q, p, k, anchors, ranges.i_hat_range, ranges.i_range);

  auto require = [&](bool ok, const std::string& name) {
    if (!ok) r.assertion1_failures.push_back(name);
  };
  require(p.mu + p.beta1() * anchors.i_r > 0.0, "mu_plus_beta1_i_r_positive");
  require(p.mu + p.sigma > 0.0, "mu_plus_sigma_positive");
  require(p.mu + p.gamma > 0.0, "mu_plus_gamma_positive");
  require(p.mu + p.omega > 0.0, "mu_plus_omega_positive");
  for (const auto& c : r.feasibility.conditions) {
    if (c.name.rfind("stability.", 0) == 0) require(c.holds.value_or(false), c.name);
  }
  require(r.hinf_defined && r.hinf_norm < 1.0, "hinf_below_one");
  r.assertion1 = r.assertion1_failures.empty();

  std::vector<Matrix8d> perturbations;
  perturbations.reserve(points.size());
  for (const auto& [i, i_hat] : points) {
    perturbations.push_back(build_decomposition(p, q, k, anchors, i, i_hat).atilde0);
  }
  const Decomposition<double> dec = build_decomposition(p, q, k, anchors, 0.0, 0.0);
  r.extended = certify_extended(dec.abar0, times, perturbations, opt);

  r.affine = affine_vectors_and_bounds(p, q, k);
  const double rho0 = r.extended.rho0;
  const double k0 = r.extended.k0;
  r.m_limit = transient_envelope_limit(k0, rho0, r.affine.b_bar_bound);
  r.m_hat_limit = transient_envelope_limit(k0, rho0, r.affine.b_hat_norm);
  r.m_tilde_limit = transient_envelope_limit(k0, rho0, r.affine.b_tilde_norm);
  r.envelopes_valid = rho0 > 0.0 && (r.extended.assertion2 || r.extended.assertion3.verdict);
  return r;
}

}  // namespace

StabilityReport certify(const EpidemicParams<double>& p, const ObserverParams<double>& q,
                        const ControlGains<double>& k, const DecompositionAnchors<double>& anchors,
                        const RangeBounds& ranges, const CertifyOptions& opt) {
  // The perturbation is affine in (I, I_hat), so its spectral norm is convex
  // and attains its maximum over the box at a corner.
  std::vector<std::pair<double, double>> corners;
  for (double i : {ranges.i_range.lo, ranges.i_range.hi})
    for (double ih : {ranges.i_hat_range.lo, ranges.i_hat_range.hi}) corners.emplace_back(i, ih);
  StabilityReport r = certify_common(p, q, k, anchors, ranges, {}, corners, opt);
  r.mode = "range-corners";
  // Without a time series the window integral is bounded by sup * T.
  r.extended.assertion3.alpha0 = r.extended.sup_delta_norm;
  r.extended.assertion3.alpha1 = 0.0;
  r.extended.assertion3.verdict =
      r.extended.abar0_stable && r.extended.assertion3.alpha0 < r.extended.assertion3.threshold;
  r.envelopes_valid =
      r.extended.rho0 > 0.0 && (r.extended.assertion2 || r.extended.assertion3.verdict);
  return r;
}

StabilityReport certify(const EpidemicParams<double>& p, const ObserverParams<double>& q,
                        const ControlGains<double>& k, const DecompositionAnchors<double>& anchors,
                        const std::vector<DeltaSample>& samples, const CertifyOptions& opt) {
  if (samples.empty()) throw std::invalid_argument("certify: empty trajectory");
  RangeBounds realized{{samples[0].i, samples[0].i}, {samples[0].i_hat, samples[0].i_hat}};
  std::vector<double> times;
  std::vector<std::pair<double, double>> points;
  for (const auto& s : samples) {
    realized.i_range.lo = std::min(realized.i_range.lo, s.i);
    realized.i_range.hi = std::max(realized.i_range.hi, s.i);
    realized.i_hat_range.lo = std::min(realized.i_hat_range.lo, s.i_hat);
    realized.i_hat_range.hi = std::max(realized.i_hat_range.hi, s.i_hat);
    times.push_back(s.t);
    points.emplace_back(s.i, s.i_hat);
  }
  StabilityReport r = certify_common(p, q, k, anchors, realized, times, points, opt);
  r.mode = "trajectory";
  return r;
}

}  // namespace seirvac
