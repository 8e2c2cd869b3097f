#ifndef SEIRVAC_CONFIG_HPP_
#define SEIRVAC_CONFIG_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "seirvac/simulator.hpp"

namespace seirvac {

// Sectioned key = value text:
//
//   [plant]     mu omega beta sigma gamma n_total s0 e0 i0 r0
//   [observer]  mu_hat omega_hat beta_hat sigma_hat gamma_hat s0 e0 i0 r0
//   [gains]     k1 k2 k3 k4 k5 g
//   [tracking]  g_max horizon g_init forcing
//   [sim]       law constant_v duration dt stride clamp_applied_v law_per_stage
//   [analysis]  i_r i_hat_r b011 b021 i_min i_max i_hat_min i_hat_max
//
// '#' starts a comment. Numbers may be written as a fraction "a/b".

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  /// 1-based line of the offending entry; 0 for whole-document constraints.
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedConfig {
  SimulationConfig config;
  /// "section.key = value" for every entry filled from a default.
  std::vector<std::string> defaults_applied;
};

/// Throws ConfigError.
ParsedConfig parse_config(const std::string& text);
ParsedConfig load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config(config_to_text(c)) reproduces c.
std::string config_to_text(const SimulationConfig& cfg);

}  // namespace seirvac

#endif  // SEIRVAC_CONFIG_HPP_
