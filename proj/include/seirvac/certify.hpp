#ifndef SEIRVAC_CERTIFY_HPP_
#define SEIRVAC_CERTIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "seirvac/feasibility.hpp"
#include "seirvac/gains.hpp"
#include "seirvac/hinf.hpp"
#include "seirvac/model.hpp"
#include "seirvac/observer.hpp"
#include "seirvac/system_matrices.hpp"

namespace seirvac {

struct CertifyOptions {
  HinfOptions hinf;
  // Base window length (days) for the integral-of-perturbation check; the
  // fit uses windows of 1/4, 1/2, 1, 2 and 4 times this.
  double window = 10.0;
  // alpha0 must stay below this fraction of rho.
  double alpha0_fraction = 0.9;
  double k0_safety = 1.05;
  double k0_t_min = 1e-3;
  double k0_t_max = 1e3;
  int k0_points = 241;
};

/// A-priori bounds on I(t) and I_hat(t).
struct RangeBounds {
  Interval<double> i_range;
  Interval<double> i_hat_range;
};

/// One sample of the realized trajectory: only I and I_hat enter the
/// perturbation matrix.
struct DeltaSample {
  double t;
  double i;
  double i_hat;
};

struct Assertion3Result {
  double alpha0 = 0.0;
  double alpha1 = 0.0;
  double window = 0.0;
  double threshold = 0.0;
  bool verdict = false;
};

/// Stability certificate for a constant block matrix plus a sampled
/// perturbation series. Used both for the SEIR system and for synthetic
/// test systems.
struct ExtendedCertificate {
  double abscissa = 0.0;  // max Re lambda(Abar0), i.e. -rho
  double rho = 0.0;
  double sup_delta_norm = 0.0;
  double rho0 = 0.0;
  bool abar0_stable = false;
  bool assertion2 = false;
  Assertion3Result assertion3;
  double k0 = 1.0;
};

/// Exponential envelope k0 e^{-rho0 t} (x0 + forcing int_0^t e^{rho0 tau} dtau).
double transient_envelope(double k0, double rho0, double x0_norm, double forcing_norm, double t);

/// Its t -> infinity limit k0 forcing / rho0 (rho0 > 0).
double transient_envelope_limit(double k0, double rho0, double forcing_norm);

/// max over a log grid of ||e^{Abar0 t}|| e^{rho0 t}, times the safety factor.
double estimate_k0(const Matrix8d& abar0, double rho0, const CertifyOptions& opt = {});

/// Fits alpha0 T + alpha1 to the worst window integrals of `norms` over
/// `times`. With fewer than two usable windows it falls back to the bound
/// sup * T.
Assertion3Result fit_window_integrals(const std::vector<double>& times,
                                      const std::vector<double>& norms, double rho,
                                      const CertifyOptions& opt);

ExtendedCertificate certify_extended(const Matrix8d& abar0, const std::vector<double>& times,
                                     const std::vector<Matrix8d>& perturbations,
                                     const CertifyOptions& opt = {});

struct StabilityReport {
  std::string mode;  // "range-corners" or "trajectory"

  bool metzler_a0 = false;
  bool metzler_a_hat0 = false;
  std::vector<std::pair<int, int>> a_hat0_metzler_violations;

  bool hurwitz_d = false;
  bool hurwitz_d_hat = false;
  bool hurwitz_char_a_hat0 = false;
  // det(sI - A0) computed independently agrees with the factored d(s).
  bool d_matches_char_a0 = false;
  double d_char_a0_max_coeff_diff = 0.0;

  bool hinf_defined = false;
  double hinf_norm = 0.0;
  double hinf_peak_frequency = 0.0;

  bool assertion1 = false;
  std::vector<std::string> assertion1_failures;

  ExtendedCertificate extended;
  bool k0_estimated = true;

  AffineVectors<double> affine;
  double m_limit = 0.0;
  double m_hat_limit = 0.0;
  double m_tilde_limit = 0.0;
  // Envelopes are only meaningful when rho0 > 0 and assertion2 or assertion3 holds.
  bool envelopes_valid = false;

  FeasibilityReport feasibility;
};

StabilityReport certify(const EpidemicParams<double>& p, const ObserverParams<double>& q,
                        const ControlGains<double>& k, const DecompositionAnchors<double>& anchors,
                        const RangeBounds& ranges, const CertifyOptions& opt = {});

StabilityReport certify(const EpidemicParams<double>& p, const ObserverParams<double>& q,
                        const ControlGains<double>& k, const DecompositionAnchors<double>& anchors,
                        const std::vector<DeltaSample>& samples, const CertifyOptions& opt = {});

}  // namespace seirvac

#endif  // SEIRVAC_CERTIFY_HPP_
