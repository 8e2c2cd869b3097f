#include "seirvac/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "seirvac/integrator.hpp"

namespace seirvac {

const char* to_string(VaccinationLaw law) {
  switch (law) {
    case VaccinationLaw::kNone: return "none";
    case VaccinationLaw::kConstant: return "constant";
    case VaccinationLaw::kFull: return "full";
    case VaccinationLaw::kRestricted: return "restricted";
    case VaccinationLaw::kSwitched: return "switched";
    case VaccinationLaw::kTracking: return "tracking";
  }
  return "?";
}

std::optional<VaccinationLaw> parse_law(const std::string& name) {
  for (auto law : {VaccinationLaw::kNone, VaccinationLaw::kConstant, VaccinationLaw::kFull,
                   VaccinationLaw::kRestricted, VaccinationLaw::kSwitched,
                   VaccinationLaw::kTracking}) {
    if (name == to_string(law)) return law;
  }
  return std::nullopt;
}

namespace {

long steps_for(double span, double dt, const char* what) {
  const double ratio = span / dt;
  const long n = std::lround(ratio);
  if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * std::max(1.0, ratio)) {
    throw std::invalid_argument(std::string(what) + " must be a positive multiple of dt");
  }
  return n;
}

void require_sum(double sum, double n, const char* what) {
  if (std::abs(sum - n) > 1e-9 * n) {
    throw std::invalid_argument(std::string(what) + " must sum to n_total");
  }
}

}  // namespace

void validate_config(const SimulationConfig& cfg) {
  const auto pr = validate_params(cfg.plant);
  if (!pr.ok()) throw std::invalid_argument("plant: " + pr.issues.front());
  const auto qr = validate_params(cfg.observer);
  if (!qr.ok()) throw std::invalid_argument("observer: " + qr.issues.front());
  if (cfg.plant.n_total != cfg.observer.n_total) {
    throw std::invalid_argument("plant and observer n_total differ");
  }
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw std::invalid_argument("dt must be > 0");
  if (!(cfg.duration >= cfg.dt)) throw std::invalid_argument("duration must be >= dt");
  steps_for(cfg.duration, cfg.dt, "duration");
  steps_for(cfg.stride, cfg.dt, "stride");
  require_sum(cfg.plant_init.sum(), cfg.plant.n_total, "plant_init");
  require_sum(cfg.observer_init.sum(), cfg.observer.n_total, "observer_init");
  if (cfg.law == VaccinationLaw::kTracking) validate_tracking_config(cfg.observer, cfg.tracking);
}

double positivity_tolerance(const SimulationConfig& cfg) { return 1e-9 * cfg.plant.n_total; }

namespace {

using State = Eigen::Matrix<double, 16, 1>;

struct LawValue {
  double v;
  bool fallback;
};

LawValue evaluate_law(const SimulationConfig& cfg, const ObserverState<double>& xh, double g) {
  switch (cfg.law) {
    case VaccinationLaw::kNone: return {0.0, false};
    case VaccinationLaw::kConstant: return {cfg.constant_v, false};
    case VaccinationLaw::kFull: return {vaccination_full(cfg.observer, cfg.gains, xh), false};
    case VaccinationLaw::kRestricted:
      return {vaccination_restricted(cfg.observer, cfg.gains, xh), false};
    case VaccinationLaw::kSwitched: {
      const auto s = vaccination_switched(cfg.observer, cfg.gains, xh);
      return {s.value, s.branch == SwitchBranch::kFallback};
    }
    case VaccinationLaw::kTracking: {
      ControlGains<double> k = cfg.gains;
      k.g = g;
      return {vaccination_full(cfg.observer, k, xh), false};
    }
  }
  return {0.0, false};
}

double apply_clamp(const SimulationConfig& cfg, double v) {
  return cfg.clamp_applied_v ? std::clamp(v, 0.0, 1.0) : v;
}

PopulationState<double> plant_part(const State& s) {
  return PopulationState<double>::fromVector(s.segment<4>(0));
}
ObserverState<double> observer_part(const State& s) {
  return ObserverState<double>::fromVector(s.segment<4>(4));
}

}  // namespace

Trajectory simulate(const SimulationConfig& cfg) {
  validate_config(cfg);
  const long n_steps = steps_for(cfg.duration, cfg.dt, "duration");
  const long stride_steps = steps_for(cfg.stride, cfg.dt, "stride");
  const double n = cfg.plant.n_total;
  const double tol = positivity_tolerance(cfg);
  const bool tracking = cfg.law == VaccinationLaw::kTracking;

  Matrix4d a_hat0 = Matrix4d::Zero();
  TrackingGainState<double> tstate;
  if (tracking) {
    a_hat0 = constant_observer_matrix(cfg.observer, cfg.gains, cfg.anchors.i_hat_r);
    tstate = TrackingGainState<double>::initial(cfg.tracking);
  }

  State s = State::Zero();
  s.segment<4>(0) = cfg.plant_init.vec();
  s.segment<4>(4) = cfg.observer_init.vec();

  Trajectory out;
  out.samples.reserve(static_cast<std::size_t>(n_steps / stride_steps + 2));
  TrajectorySummary& sum = out.summary;
  sum.min_plant_component = cfg.plant_init.minComponent();
  sum.min_observer_component = cfg.observer_init.minComponent();
  sum.min_v_cmd = std::numeric_limits<double>::infinity();
  sum.max_v_cmd = -std::numeric_limits<double>::infinity();

  auto track_state = [&](const State& st, double t) {
    const auto x = plant_part(st);
    const auto xh = observer_part(st);
    sum.max_plant_drift = std::max(sum.max_plant_drift, std::abs(x.sum() - n));
    sum.max_observer_drift = std::max(sum.max_observer_drift, std::abs(xh.sum() - n));
    sum.min_plant_component = std::min(sum.min_plant_component, x.minComponent());
    sum.min_observer_component = std::min(sum.min_observer_component, xh.minComponent());
    const bool bad_x = x.minComponent() < -tol;
    const bool bad_xh = xh.minComponent() < -tol;
    if (bad_x) ++sum.plant_positivity_violations;
    if (bad_xh) ++sum.observer_positivity_violations;
    if ((bad_x || bad_xh) && !sum.first_violation_time) sum.first_violation_time = t;
  };

  auto record = [&](const State& st, double t, double v_cmd, double v_app, double g) {
    const auto x = plant_part(st);
    const auto xh = observer_part(st);
    out.samples.push_back({t, x, xh, v_cmd, v_app, g, observation_error(x, xh).norm});
  };

  track_state(s, 0.0);
  double g = cfg.gains.g;
  for (long step = 0; step <= n_steps; ++step) {
    const double t = static_cast<double>(step) * cfg.dt;
    if (tracking) {
      tstate.z_num = s.segment<4>(8);
      tstate.z_den = s.segment<4>(12);
      g = tracking_gain_select(cfg.observer, cfg.tracking, tstate, t).g;
    }
    const LawValue law = evaluate_law(cfg, observer_part(s), g);
    const double v_app = apply_clamp(cfg, law.v);
    sum.min_v_cmd = std::min(sum.min_v_cmd, law.v);
    sum.max_v_cmd = std::max(sum.max_v_cmd, law.v);
    if (v_app != law.v) ++sum.clamp_events;
    if (law.fallback) ++sum.fallback_events;

    if (step % stride_steps == 0 || step == n_steps) record(s, t, law.v, v_app, g);
    if (step == n_steps) break;

    auto rhs = [&](double, const State& st) {
      const Vector4d x = st.segment<4>(0);
      const Vector4d xh = st.segment<4>(4);
      double v = v_app;
      if (cfg.law_per_stage) {
        v = apply_clamp(cfg, evaluate_law(cfg, ObserverState<double>::fromVector(xh), g).v);
      }
      State d;
      d.segment<4>(0) = seir_derivative(cfg.plant, x, v);
      d.segment<4>(4) = observer_derivative(cfg.observer, xh, v);
      if (tracking) {
        const Vector4d weight =
            cfg.tracking_forcing == TrackingForcing::kObserverState ? xh : Vector4d(x - xh);
        const Vector4d f = tracking_forcing(cfg.observer, cfg.gains, cfg.anchors.i_hat_r,
                                            xh(kI), weight);
        d.segment<8>(8) =
            tracking_aux_derivative<double>(a_hat0, cfg.observer.mu_hat, f, st.segment<8>(8));
      } else {
        d.segment<8>(8).setZero();
      }
      return d;
    };
    s = rk4_step(rhs, s, t, cfg.dt);
    if (!s.allFinite()) {
      throw NumericalAbort("non-finite state at t=" + std::to_string(t + cfg.dt), t + cfg.dt);
    }
    track_state(s, t + cfg.dt);
    ++sum.steps;
  }

  sum.initial_err_norm = out.samples.front().err_norm;
  sum.final_err_norm = out.samples.back().err_norm;
  return out;
}

std::optional<ControlGains<double>> certified_gains(const SimulationConfig& cfg) {
  switch (cfg.law) {
    case VaccinationLaw::kNone: return ControlGains<double>{};
    case VaccinationLaw::kConstant: {
      ControlGains<double> k{};
      k.g = cfg.observer.mu_hat * cfg.constant_v;
      return k;
    }
    case VaccinationLaw::kFull: return cfg.gains;
    case VaccinationLaw::kRestricted: {
      ControlGains<double> k = cfg.gains;
      k.k2 = 0.0;
      return k;
    }
    default: return std::nullopt;
  }
}

StabilityReport certify_config(const SimulationConfig& cfg, const CertifyOptions& opt) {
  const ControlGains<double> k =
      cfg.law == VaccinationLaw::kNone ? cfg.gains : certified_gains(cfg).value_or(cfg.gains);
  return certify(cfg.plant, cfg.observer, k, cfg.anchors, cfg.ranges, opt);
}

StabilityReport certify_trajectory(const SimulationConfig& cfg, const Trajectory& traj,
                                   const CertifyOptions& opt) {
  std::vector<DeltaSample> samples;
  samples.reserve(traj.samples.size());
  for (const auto& s : traj.samples) samples.push_back({s.t, s.x.i, s.xh.i});
  const ControlGains<double> k = certified_gains(cfg).value_or(cfg.gains);
  return certify(cfg.plant, cfg.observer, k, cfg.anchors, samples, opt);
}

Diagnostics compute_diagnostics(const SimulationConfig& cfg, const Trajectory& traj,
                                const StabilityReport& report) {
  Diagnostics d;
  const double n = cfg.plant.n_total;
  const double tol = positivity_tolerance(cfg);
  const double error_bound = 2.0 * std::sqrt(2.0) * n;
  if (report.mode == "trajectory") d.realized_feasibility = report.feasibility;

  d.envelopes_checked =
      report.envelopes_valid && certified_gains(cfg).has_value() && !traj.samples.empty();
  double xh0 = 0.0, xt0 = 0.0, xb0 = 0.0;
  if (!traj.samples.empty()) {
    const auto& s0 = traj.samples.front();
    xh0 = s0.xh.vec().norm();
    xt0 = s0.err_norm;
    xb0 = std::hypot(xh0, xt0);
  }
  const double k0 = report.extended.k0;
  const double rho0 = report.extended.rho0;
  // Relative slack for rounding in the envelope comparison.
  const double slack = 1e-12;

  for (const auto& s : traj.samples) {
    for (double c : {s.x.s, s.x.e, s.x.i, s.x.r, s.xh.s, s.xh.e, s.xh.i, s.xh.r}) {
      if (c < -tol || c > n + tol) {
        ++d.population_bound_violations;
        break;
      }
    }
    d.max_error_norm = std::max(d.max_error_norm, s.err_norm);
    if (s.err_norm > error_bound) ++d.error_bound_violations;
    if (!d.envelopes_checked) continue;

    const double xh = s.xh.vec().norm();
    const double xb = std::hypot(xh, s.err_norm);
    const double m = transient_envelope(k0, rho0, xb0, report.affine.b_bar_bound, s.t);
    const double mh = transient_envelope(k0, rho0, xh0, report.affine.b_hat_norm, s.t);
    const double mt = transient_envelope(k0, rho0, xt0, report.affine.b_tilde_norm, s.t);
    if (xb > m * (1.0 + slack)) ++d.m_violations;
    if (xh > mh * (1.0 + slack)) ++d.m_hat_violations;
    if (s.err_norm > mt * (1.0 + slack)) ++d.m_tilde_violations;
  }
  return d;
}

EpidemicParams<double> reference_params() {
  return {1.0 / 235.0, 1.0 / 14.0, 1.46, 0.5, 0.5, 1000.0};
}

ControlGains<double> reference_gains(const ObserverParams<double>& q) {
  return {1.0, -0.1, -q.gamma_hat, 0.95 * q.omega_hat, -q.beta1_hat(), q.mu_hat};
}

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::kA: return "A";
    case Scenario::kB: return "B";
    case Scenario::kC: return "C";
  }
  return "?";
}

std::optional<Scenario> parse_scenario(const std::string& name) {
  if (name == "A" || name == "a") return Scenario::kA;
  if (name == "B" || name == "b") return Scenario::kB;
  if (name == "C" || name == "c") return Scenario::kC;
  return std::nullopt;
}

SimulationConfig scenario_config(Scenario s, const ScenarioOverrides& o) {
  SimulationConfig cfg;
  const EpidemicParams<double> ref = reference_params();
  cfg.observer = ObserverParams<double>::matching(ref);
  cfg.plant = ref;
  if (s != Scenario::kA) {
    cfg.plant.mu *= o.mu_factor;
    cfg.plant.omega *= o.omega_factor;
    cfg.plant.beta *= o.beta_factor;
    cfg.plant.sigma *= o.sigma_factor;
    cfg.plant.gamma *= o.gamma_factor;
  }
  cfg.plant_init = o.plant_init.value_or(PopulationState<double>(400.0, 50.0, 50.0, 500.0));
  cfg.observer_init = ObserverState<double>(250.0, 150.0, 150.0, 450.0);
  if (s == Scenario::kC) {
    cfg.law = VaccinationLaw::kFull;
    cfg.gains = reference_gains(cfg.observer);
  }
  cfg.anchors = {150.0, 150.0, 0.0, 0.0};
  cfg.ranges = {{0.0, ref.n_total}, {0.0, ref.n_total}};
  cfg.tracking = {5.0 * cfg.observer.mu_hat, 200.0, 0.0};
  if (o.duration) cfg.duration = *o.duration;
  if (o.dt) cfg.dt = *o.dt;
  if (o.stride) cfg.stride = *o.stride;
  if (o.clamp_applied_v) cfg.clamp_applied_v = *o.clamp_applied_v;
  return cfg;
}

RunResult run_and_certify(const SimulationConfig& cfg) {
  RunResult r;
  r.config = cfg;
  r.trajectory = simulate(cfg);
  r.report = certify_trajectory(cfg, r.trajectory);
  r.diagnostics = compute_diagnostics(cfg, r.trajectory, r.report);
  r.trajectory.summary.envelope_violations = r.diagnostics.envelope_violations();
  return r;
}

RunResult run_scenario(Scenario s, const ScenarioOverrides& o) {
  return run_and_certify(scenario_config(s, o));
}

}  // namespace seirvac
