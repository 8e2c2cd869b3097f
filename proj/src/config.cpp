#include "seirvac/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "seirvac/io.hpp"

namespace seirvac {

namespace {

struct Entry {
  std::string value;
  int line;
};

using Section = std::map<std::string, Entry>;

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"plant", {"mu", "omega", "beta", "sigma", "gamma", "n_total", "s0", "e0", "i0", "r0"}},
      {"observer",
       {"mu_hat", "omega_hat", "beta_hat", "sigma_hat", "gamma_hat", "s0", "e0", "i0", "r0"}},
      {"gains", {"k1", "k2", "k3", "k4", "k5", "g"}},
      {"tracking", {"g_max", "horizon", "g_init", "forcing"}},
      {"sim",
       {"law", "constant_v", "duration", "dt", "stride", "clamp_applied_v", "law_per_stage"}},
      {"analysis", {"i_r", "i_hat_r", "b011", "b021", "i_min", "i_max", "i_hat_min", "i_hat_max"}},
  };
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const Entry& e, const std::string& key) {
  try {
    const auto slash = e.value.find('/');
    if (slash == std::string::npos) return parse_double(e.value);
    const double num = parse_double(trim(e.value.substr(0, slash)));
    const double den = parse_double(trim(e.value.substr(slash + 1)));
    if (den == 0.0) throw std::invalid_argument("zero denominator");
    return num / den;
  } catch (const std::invalid_argument&) {
    throw ConfigError("line " + std::to_string(e.line) + ": " + key + ": invalid number '" +
                          e.value + "'",
                      e.line);
  }
}

bool parse_bool(const Entry& e, const std::string& key) {
  if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
  if (e.value == "false" || e.value == "0" || e.value == "no") return false;
  throw ConfigError(
      "line " + std::to_string(e.line) + ": " + key + ": expected true or false", e.line);
}

class Resolver {
 public:
  Resolver(std::map<std::string, Section> doc, std::vector<std::string>& defaults)
      : doc_(std::move(doc)), defaults_(defaults) {}

  const Entry* find(const std::string& sec, const std::string& key) const {
    const auto s = doc_.find(sec);
    if (s == doc_.end()) return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  }

  double number(const std::string& sec, const std::string& key, double fallback) {
    if (const Entry* e = find(sec, key)) return parse_number(*e, sec + "." + key);
    defaults_.push_back(sec + "." + key + " = " + format_double(fallback));
    return fallback;
  }

  bool flag(const std::string& sec, const std::string& key, bool fallback) {
    if (const Entry* e = find(sec, key)) return parse_bool(*e, sec + "." + key);
    defaults_.push_back(sec + "." + key + " = " + (fallback ? "true" : "false"));
    return fallback;
  }

  std::string word(const std::string& sec, const std::string& key, const std::string& fallback) {
    if (const Entry* e = find(sec, key)) return e->value;
    defaults_.push_back(sec + "." + key + " = " + fallback);
    return fallback;
  }

  int line_of(const std::string& sec, const std::string& key) const {
    const Entry* e = find(sec, key);
    return e ? e->line : 0;
  }

 private:
  std::map<std::string, Section> doc_;
  std::vector<std::string>& defaults_;
};

void require_conservation(double sum, double n, const char* which) {
  if (std::abs(sum - n) > 1e-9 * n) {
    throw ConfigError(std::string("conservation violated: ") + which + " sums to " +
                          format_double(sum) + ", expected n_total = " + format_double(n),
                      0);
  }
}

}  // namespace

ParsedConfig parse_config(const std::string& text) {
  std::map<std::string, Section> doc;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "unterminated section header", line_no);
      section = trim(line.substr(1, line.size() - 2));
      if (!schema().count(section)) {
        throw ConfigError(where + "unknown section [" + section + "]", line_no);
      }
      doc[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value", line_no);
    if (section.empty()) throw ConfigError(where + "entry outside of any section", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!schema().at(section).count(key)) {
      throw ConfigError(where + "unknown key '" + key + "' in [" + section + "]", line_no);
    }
    if (value.empty()) throw ConfigError(where + "empty value for '" + key + "'", line_no);
    if (!doc[section].emplace(key, Entry{value, line_no}).second) {
      throw ConfigError(where + "duplicate key '" + key + "' in [" + section + "]", line_no);
    }
  }

  ParsedConfig out;
  Resolver r(std::move(doc), out.defaults_applied);
  SimulationConfig& c = out.config;
  const EpidemicParams<double> ref = reference_params();

  c.plant.mu = r.number("plant", "mu", ref.mu);
  c.plant.omega = r.number("plant", "omega", ref.omega);
  c.plant.beta = r.number("plant", "beta", ref.beta);
  c.plant.sigma = r.number("plant", "sigma", ref.sigma);
  c.plant.gamma = r.number("plant", "gamma", ref.gamma);
  c.plant.n_total = r.number("plant", "n_total", ref.n_total);
  c.plant_init.s = r.number("plant", "s0", 400.0);
  c.plant_init.e = r.number("plant", "e0", 50.0);
  c.plant_init.i = r.number("plant", "i0", 50.0);
  c.plant_init.r = r.number("plant", "r0", 500.0);

  c.observer.mu_hat = r.number("observer", "mu_hat", c.plant.mu);
  c.observer.omega_hat = r.number("observer", "omega_hat", c.plant.omega);
  c.observer.beta_hat = r.number("observer", "beta_hat", c.plant.beta);
  c.observer.sigma_hat = r.number("observer", "sigma_hat", c.plant.sigma);
  c.observer.gamma_hat = r.number("observer", "gamma_hat", c.plant.gamma);
  c.observer.n_total = c.plant.n_total;
  c.observer_init.s = r.number("observer", "s0", 250.0);
  c.observer_init.e = r.number("observer", "e0", 150.0);
  c.observer_init.i = r.number("observer", "i0", 150.0);
  c.observer_init.r = r.number("observer", "r0", 450.0);

  c.gains.k1 = r.number("gains", "k1", 0.0);
  c.gains.k2 = r.number("gains", "k2", 0.0);
  c.gains.k3 = r.number("gains", "k3", 0.0);
  c.gains.k4 = r.number("gains", "k4", 0.0);
  c.gains.k5 = r.number("gains", "k5", 0.0);
  c.gains.g = r.number("gains", "g", 0.0);

  c.tracking.g_max = r.number("tracking", "g_max", 5.0 * c.observer.mu_hat);
  c.tracking.horizon_t = r.number("tracking", "horizon", 200.0);
  c.tracking.g_init = r.number("tracking", "g_init", 0.0);
  const std::string forcing = r.word("tracking", "forcing", "observer_state");
  if (forcing == "observer_state") {
    c.tracking_forcing = TrackingForcing::kObserverState;
  } else if (forcing == "observation_error") {
    c.tracking_forcing = TrackingForcing::kObservationError;
  } else {
    const int l = r.line_of("tracking", "forcing");
    throw ConfigError("line " + std::to_string(l) +
                          ": tracking.forcing must be observer_state or observation_error",
                      l);
  }

  const std::string law = r.word("sim", "law", "none");
  if (const auto parsed = parse_law(law)) {
    c.law = *parsed;
  } else {
    const int l = r.line_of("sim", "law");
    throw ConfigError("line " + std::to_string(l) + ": unknown law '" + law +
                          "' (none, constant, full, restricted, switched, tracking)",
                      l);
  }
  c.constant_v = r.number("sim", "constant_v", 0.0);
  c.duration = r.number("sim", "duration", 1000.0);
  c.dt = r.number("sim", "dt", 0.01);
  c.stride = r.number("sim", "stride", 1.0);
  c.clamp_applied_v = r.flag("sim", "clamp_applied_v", true);
  c.law_per_stage = r.flag("sim", "law_per_stage", false);

  c.anchors.i_hat_r = r.number("analysis", "i_hat_r", c.observer_init.i);
  c.anchors.i_r = r.number("analysis", "i_r", c.anchors.i_hat_r);
  c.anchors.b011 = r.number("analysis", "b011", 0.0);
  c.anchors.b021 = r.number("analysis", "b021", 0.0);
  c.ranges.i_range.lo = r.number("analysis", "i_min", 0.0);
  c.ranges.i_range.hi = r.number("analysis", "i_max", c.plant.n_total);
  c.ranges.i_hat_range.lo = r.number("analysis", "i_hat_min", 0.0);
  c.ranges.i_hat_range.hi = r.number("analysis", "i_hat_max", c.plant.n_total);

  require_conservation(c.plant_init.sum(), c.plant.n_total, "plant initial state");
  require_conservation(c.observer_init.sum(), c.plant.n_total, "observer initial state");
  if (c.ranges.i_range.lo > c.ranges.i_range.hi ||
      c.ranges.i_hat_range.lo > c.ranges.i_hat_range.hi) {
    throw ConfigError("analysis ranges must satisfy min <= max", 0);
  }
  try {
    validate_config(c);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what(), 0);
  }
  return out;
}

ParsedConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config file " + path.string(), 0);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string config_to_text(const SimulationConfig& c) {
  std::ostringstream os;
  auto kv = [&](const char* k, double v) { os << k << " = " << format_double(v) << '\n'; };
  auto kb = [&](const char* k, bool v) { os << k << " = " << (v ? "true" : "false") << '\n'; };
  os << "[plant]\n";
  kv("mu", c.plant.mu);
  kv("omega", c.plant.omega);
  kv("beta", c.plant.beta);
  kv("sigma", c.plant.sigma);
  kv("gamma", c.plant.gamma);
  kv("n_total", c.plant.n_total);
  kv("s0", c.plant_init.s);
  kv("e0", c.plant_init.e);
  kv("i0", c.plant_init.i);
  kv("r0", c.plant_init.r);
  os << "\n[observer]\n";
  kv("mu_hat", c.observer.mu_hat);
  kv("omega_hat", c.observer.omega_hat);
  kv("beta_hat", c.observer.beta_hat);
  kv("sigma_hat", c.observer.sigma_hat);
  kv("gamma_hat", c.observer.gamma_hat);
  kv("s0", c.observer_init.s);
  kv("e0", c.observer_init.e);
  kv("i0", c.observer_init.i);
  kv("r0", c.observer_init.r);
  os << "\n[gains]\n";
  kv("k1", c.gains.k1);
  kv("k2", c.gains.k2);
  kv("k3", c.gains.k3);
  kv("k4", c.gains.k4);
  kv("k5", c.gains.k5);
  kv("g", c.gains.g);
  os << "\n[tracking]\n";
  kv("g_max", c.tracking.g_max);
  kv("horizon", c.tracking.horizon_t);
  kv("g_init", c.tracking.g_init);
  os << "forcing = "
     << (c.tracking_forcing == TrackingForcing::kObserverState ? "observer_state"
                                                               : "observation_error")
     << '\n';
  os << "\n[sim]\n";
  os << "law = " << to_string(c.law) << '\n';
  kv("constant_v", c.constant_v);
  kv("duration", c.duration);
  kv("dt", c.dt);
  kv("stride", c.stride);
  kb("clamp_applied_v", c.clamp_applied_v);
  kb("law_per_stage", c.law_per_stage);
  os << "\n[analysis]\n";
  kv("i_r", c.anchors.i_r);
  kv("i_hat_r", c.anchors.i_hat_r);
  kv("b011", c.anchors.b011);
  kv("b021", c.anchors.b021);
  kv("i_min", c.ranges.i_range.lo);
  kv("i_max", c.ranges.i_range.hi);
  kv("i_hat_min", c.ranges.i_hat_range.lo);
  kv("i_hat_max", c.ranges.i_hat_range.hi);
  return os.str();
}

}  // namespace seirvac
