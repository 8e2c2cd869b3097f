#ifndef SEIRVAC_IO_HPP_
#define SEIRVAC_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "seirvac/simulator.hpp"

namespace seirvac {

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

/// Parses a full-string decimal; throws std::invalid_argument otherwise.
double parse_double(const std::string& text);

inline constexpr const char* kTrajectoryHeader =
    "t,S,E,I,R,S_hat,E_hat,I_hat,R_hat,V_cmd,V_app,g,err_norm";

void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// Same columns, whitespace separated, header prefixed with '#'.
void write_trajectory_dat(std::ostream& os, const Trajectory& traj);

/// Reads back what write_trajectory_csv wrote. Only the samples are
/// restored; the summary is left default.
Trajectory read_trajectory_csv(std::istream& is);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Flat key/value view of a report. Keys are stable and documented in the
/// README.
KeyValues report_key_values(const StabilityReport& r);
KeyValues summary_key_values(const TrajectorySummary& s);
KeyValues diagnostics_key_values(const Diagnostics& d);

void write_key_values(std::ostream& os, const KeyValues& kv);

/// `key,value` rows under a `key,value` header.
void write_key_values_csv(std::ostream& os, const KeyValues& kv);

struct RunManifest {
  std::string config_path;
  std::string config_echo;
  std::string output_dir;
  std::vector<std::string> artifacts;
  std::string tool_version;
  double wall_seconds = 0.0;
};

void write_manifest(std::ostream& os, const RunManifest& m);

/// Writes `content` to `path`, throwing std::runtime_error on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace seirvac

#endif  // SEIRVAC_IO_HPP_
