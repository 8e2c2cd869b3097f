#ifndef SEIRVAC_COMMANDS_HPP_
#define SEIRVAC_COMMANDS_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "seirvac/simulator.hpp"

namespace seirvac {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitIo = 3;

const char* tool_version();

struct SimulateArgs {
  std::filesystem::path config_path;
  std::filesystem::path out_dir;
  bool write_dat = false;
};

/// Writes trajectory.csv, report.txt and manifest.txt (plus trajectory.dat
/// when requested) into out_dir.
int cmd_simulate(const SimulateArgs& args, std::ostream& err);

struct AnalyzeArgs {
  std::filesystem::path config_path;
  std::optional<std::filesystem::path> report_path;
};

/// Range-corner certificate of the configured gains, printed to `out` and
/// optionally written to report_path.
int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);

struct ScenariosArgs {
  std::filesystem::path out_dir;
  bool write_dat = false;
  ScenarioOverrides overrides;
};

/// Runs scenarios A, B and C concurrently into out_dir/{A,B,C} and writes
/// out_dir/summary.csv.
int cmd_scenarios(const ScenariosArgs& args, std::ostream& err);

/// Writes one run's artifacts into `dir` and returns the file names written.
std::vector<std::string> write_run_artifacts(const std::filesystem::path& dir,
                                             const RunResult& run, const std::string& config_path,
                                             double wall_seconds, bool write_dat);

inline constexpr const char* kSummaryHeader =
    "scenario,initial_err_norm,final_err_norm,max_plant_drift,max_observer_drift,"
    "plant_positivity_violations,observer_positivity_violations,clamp_events,"
    "envelope_violations,population_bound_violations";

}  // namespace seirvac

#endif  // SEIRVAC_COMMANDS_HPP_
