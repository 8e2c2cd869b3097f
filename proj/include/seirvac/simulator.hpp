#ifndef SEIRVAC_SIMULATOR_HPP_
#define SEIRVAC_SIMULATOR_HPP_

#include <optional>
#include <string>
#include <vector>

#include "seirvac/certify.hpp"
#include "seirvac/gains.hpp"
#include "seirvac/model.hpp"
#include "seirvac/observer.hpp"
#include "seirvac/tracking.hpp"
#include "seirvac/vaccination.hpp"

namespace seirvac {

enum class VaccinationLaw { kNone, kConstant, kFull, kRestricted, kSwitched, kTracking };

// What multiplies dA_hat inside the tracking-gain numerator integral.
enum class TrackingForcing { kObserverState, kObservationError };

const char* to_string(VaccinationLaw law);
std::optional<VaccinationLaw> parse_law(const std::string& name);

struct SimulationConfig {
  EpidemicParams<double> plant;
  ObserverParams<double> observer;
  PopulationState<double> plant_init;
  ObserverState<double> observer_init;

  VaccinationLaw law = VaccinationLaw::kNone;
  double constant_v = 0.0;
  ControlGains<double> gains;
  TrackingGainConfig<double> tracking;
  TrackingForcing tracking_forcing = TrackingForcing::kObserverState;

  DecompositionAnchors<double> anchors;
  RangeBounds ranges;  // a-priori bounds for range-corner certification

  double duration = 1000.0;
  double dt = 0.01;
  double stride = 1.0;
  bool clamp_applied_v = true;
  // Evaluate the law at every RK4 stage instead of holding it over a step.
  bool law_per_stage = false;
};

/// Throws std::invalid_argument naming the first violated invariant.
void validate_config(const SimulationConfig& cfg);

struct TrajectorySample {
  double t;
  PopulationState<double> x;
  ObserverState<double> xh;
  double v_cmd;
  double v_app;
  double g;
  double err_norm;
};

struct TrajectorySummary {
  double max_plant_drift = 0.0;     // max |S+E+I+R - N| over every step
  double max_observer_drift = 0.0;
  double min_plant_component = 0.0;
  double min_observer_component = 0.0;
  double min_v_cmd = 0.0;
  double max_v_cmd = 0.0;
  // Steps where some component fell below -positivity_tol.
  long plant_positivity_violations = 0;
  long observer_positivity_violations = 0;
  std::optional<double> first_violation_time;
  long clamp_events = 0;
  long fallback_events = 0;
  double initial_err_norm = 0.0;
  double final_err_norm = 0.0;
  long envelope_violations = 0;
  long steps = 0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  TrajectorySummary summary;
};

/// Integrates plant and observer (plus the tracking-gain auxiliary states
/// when that law is selected) with fixed-step RK4. The law reads only the
/// observer state. Throws NumericalAbort on a non-finite state.
Trajectory simulate(const SimulationConfig& cfg);

/// Positivity threshold used by the simulator summary: 1e-9 N.
double positivity_tolerance(const SimulationConfig& cfg);

struct Diagnostics {
  bool envelopes_checked = false;
  long m_violations = 0;
  long m_hat_violations = 0;
  long m_tilde_violations = 0;
  long population_bound_violations = 0;
  long error_bound_violations = 0;  // ||x_tilde|| > 2 sqrt(2) N
  double max_error_norm = 0.0;
  std::optional<FeasibilityReport> realized_feasibility;

  long envelope_violations() const { return m_violations + m_hat_violations + m_tilde_violations; }
};

Diagnostics compute_diagnostics(const SimulationConfig& cfg, const Trajectory& traj,
                                const StabilityReport& report);

/// Gains for which the selected law is the affine-plus-bilinear form the
/// certificate assumes: none -> zero, constant V -> g = mu_hat V,
/// restricted -> k2 = 0, full -> as given. Empty for switched and tracking.
std::optional<ControlGains<double>> certified_gains(const SimulationConfig& cfg);

/// A-priori certificate over the corners of cfg.ranges. Laws without an
/// affine form (and law none) are analyzed with the configured gains.
StabilityReport certify_config(const SimulationConfig& cfg, const CertifyOptions& opt = {});

/// Certificate over the realized trajectory.
StabilityReport certify_trajectory(const SimulationConfig& cfg, const Trajectory& traj,
                                   const CertifyOptions& opt = {});

// Presets.

EpidemicParams<double> reference_params();
ControlGains<double> reference_gains(const ObserverParams<double>& q);

enum class Scenario { kA, kB, kC };
const char* to_string(Scenario s);
std::optional<Scenario> parse_scenario(const std::string& name);

struct ScenarioOverrides {
  std::optional<double> duration;
  std::optional<double> dt;
  std::optional<double> stride;
  std::optional<PopulationState<double>> plant_init;
  std::optional<bool> clamp_applied_v;
  // Multipliers on the plant rates for the mismatched-parameter scenarios.
  double mu_factor = 1.0;
  double omega_factor = 1.0;
  double beta_factor = 1.2;
  double sigma_factor = 0.8;
  double gamma_factor = 0.8;
};

SimulationConfig scenario_config(Scenario s, const ScenarioOverrides& o = {});

struct RunResult {
  SimulationConfig config;
  Trajectory trajectory;
  StabilityReport report;
  Diagnostics diagnostics;
};

/// simulate + certify over the trajectory + diagnostics; fills the summary's
/// envelope violation count.
RunResult run_and_certify(const SimulationConfig& cfg);

RunResult run_scenario(Scenario s, const ScenarioOverrides& o = {});

}  // namespace seirvac

#endif  // SEIRVAC_SIMULATOR_HPP_
