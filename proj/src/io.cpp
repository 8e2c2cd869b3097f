#include "seirvac/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace seirvac {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || first == last) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return v;
}

namespace {

std::vector<double> row_values(const TrajectorySample& s) {
  return {s.t,    s.x.s,  s.x.e,  s.x.i,   s.x.r, s.xh.s, s.xh.e,
          s.xh.i, s.xh.r, s.v_cmd, s.v_app, s.g,   s.err_norm};
}

void write_rows(std::ostream& os, const Trajectory& traj, char sep) {
  for (const auto& s : traj.samples) {
    bool first = true;
    for (double v : row_values(s)) {
      if (!first) os << sep;
      os << format_double(v);
      first = false;
    }
    os << '\n';
  }
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << kTrajectoryHeader << '\n';
  write_rows(os, traj, ',');
}

void write_trajectory_dat(std::ostream& os, const Trajectory& traj) {
  std::string header = kTrajectoryHeader;
  for (char& c : header) {
    if (c == ',') c = ' ';
  }
  os << "# " << header << '\n';
  write_rows(os, traj, ' ');
}

Trajectory read_trajectory_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kTrajectoryHeader) {
    throw std::runtime_error("trajectory csv: bad header");
  }
  Trajectory traj;
  long line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> v;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(parse_double(cell));
    if (v.size() != 13) {
      throw std::runtime_error("trajectory csv: line " + std::to_string(line_no) +
                               " has " + std::to_string(v.size()) + " fields");
    }
    traj.samples.push_back({v[0],
                            {v[1], v[2], v[3], v[4]},
                            {v[5], v[6], v[7], v[8]},
                            v[9],
                            v[10],
                            v[11],
                            v[12]});
  }
  return traj;
}

namespace {

std::string fmt(bool b) { return b ? "true" : "false"; }
std::string fmt(double x) { return format_double(x); }
std::string fmt(long x) { return std::to_string(x); }

std::string fmt(const std::optional<bool>& b) { return b ? fmt(*b) : "n/a"; }

}  // namespace

KeyValues report_key_values(const StabilityReport& r) {
  KeyValues kv;
  auto add = [&](std::string k, std::string v) { kv.emplace_back(std::move(k), std::move(v)); };
  add("mode", r.mode);
  add("metzler_a0", fmt(r.metzler_a0));
  add("metzler_a_hat0", fmt(r.metzler_a_hat0));
  std::string viol;
  for (const auto& [i, j] : r.a_hat0_metzler_violations) {
    if (!viol.empty()) viol += ';';
    viol += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
  }
  add("a_hat0_metzler_violations", viol.empty() ? "none" : viol);
  add("hurwitz_d", fmt(r.hurwitz_d));
  add("hurwitz_d_hat", fmt(r.hurwitz_d_hat));
  add("hurwitz_char_a_hat0", fmt(r.hurwitz_char_a_hat0));
  add("d_matches_char_a0", fmt(r.d_matches_char_a0));
  add("d_char_a0_max_coeff_diff", fmt(r.d_char_a0_max_coeff_diff));
  add("hinf_defined", fmt(r.hinf_defined));
  add("hinf_norm", fmt(r.hinf_norm));
  add("hinf_peak_frequency", fmt(r.hinf_peak_frequency));
  add("assertion1", fmt(r.assertion1));
  std::string fails;
  for (const auto& f : r.assertion1_failures) fails += (fails.empty() ? "" : ";") + f;
  add("assertion1_failures", fails.empty() ? "none" : fails);
  const auto& e = r.extended;
  add("abscissa", fmt(e.abscissa));
  add("rho", fmt(e.rho));
  add("sup_delta_norm", fmt(e.sup_delta_norm));
  add("rho0", fmt(e.rho0));
  add("abar0_stable", fmt(e.abar0_stable));
  add("assertion2", fmt(e.assertion2));
  add("assertion3", fmt(e.assertion3.verdict));
  add("assertion3_alpha0", fmt(e.assertion3.alpha0));
  add("assertion3_alpha1", fmt(e.assertion3.alpha1));
  add("assertion3_window", fmt(e.assertion3.window));
  add("assertion3_threshold", fmt(e.assertion3.threshold));
  add("k0", fmt(e.k0));
  add("k0_estimated", fmt(r.k0_estimated));
  add("b_hat_norm", fmt(r.affine.b_hat_norm));
  add("b_tilde_norm", fmt(r.affine.b_tilde_norm));
  add("b_bar_norm", fmt(r.affine.b_bar_norm));
  add("b_bar_bound", fmt(r.affine.b_bar_bound));
  add("b_bar_bound_loose", fmt(r.affine.b_bar_bound_loose));
  add("m_limit", fmt(r.m_limit));
  add("m_hat_limit", fmt(r.m_hat_limit));
  add("m_tilde_limit", fmt(r.m_tilde_limit));
  add("envelopes_valid", fmt(r.envelopes_valid));
  add("sandwich_min", fmt(r.feasibility.sandwich_min));
  add("sandwich_max", fmt(r.feasibility.sandwich_max));
  for (const auto& c : r.feasibility.conditions) add("feasibility." + c.name, fmt(c.holds));
  return kv;
}

KeyValues summary_key_values(const TrajectorySummary& s) {
  KeyValues kv;
  auto add = [&](std::string k, std::string v) { kv.emplace_back(std::move(k), std::move(v)); };
  add("steps", fmt(s.steps));
  add("max_plant_drift", fmt(s.max_plant_drift));
  add("max_observer_drift", fmt(s.max_observer_drift));
  add("min_plant_component", fmt(s.min_plant_component));
  add("min_observer_component", fmt(s.min_observer_component));
  add("min_v_cmd", fmt(s.min_v_cmd));
  add("max_v_cmd", fmt(s.max_v_cmd));
  add("plant_positivity_violations", fmt(s.plant_positivity_violations));
  add("observer_positivity_violations", fmt(s.observer_positivity_violations));
  add("first_violation_time", s.first_violation_time ? fmt(*s.first_violation_time) : "none");
  add("clamp_events", fmt(s.clamp_events));
  add("fallback_events", fmt(s.fallback_events));
  add("initial_err_norm", fmt(s.initial_err_norm));
  add("final_err_norm", fmt(s.final_err_norm));
  add("envelope_violations", fmt(s.envelope_violations));
  return kv;
}

KeyValues diagnostics_key_values(const Diagnostics& d) {
  KeyValues kv;
  auto add = [&](std::string k, std::string v) { kv.emplace_back(std::move(k), std::move(v)); };
  add("envelopes_checked", fmt(d.envelopes_checked));
  add("m_violations", fmt(d.m_violations));
  add("m_hat_violations", fmt(d.m_hat_violations));
  add("m_tilde_violations", fmt(d.m_tilde_violations));
  add("population_bound_violations", fmt(d.population_bound_violations));
  add("error_bound_violations", fmt(d.error_bound_violations));
  add("max_error_norm", fmt(d.max_error_norm));
  return kv;
}

void write_key_values(std::ostream& os, const KeyValues& kv) {
  for (const auto& [k, v] : kv) os << k << " = " << v << '\n';
}

void write_key_values_csv(std::ostream& os, const KeyValues& kv) {
  os << "key,value\n";
  for (const auto& [k, v] : kv) os << k << ',' << v << '\n';
}

void write_manifest(std::ostream& os, const RunManifest& m) {
  os << "tool_version = " << m.tool_version << '\n';
  os << "config_path = " << m.config_path << '\n';
  os << "output_dir = " << m.output_dir << '\n';
  os << "wall_seconds = " << format_double(m.wall_seconds) << '\n';
  for (const auto& a : m.artifacts) os << "artifact = " << a << '\n';
  os << "\n# resolved configuration\n" << m.config_echo;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace seirvac
