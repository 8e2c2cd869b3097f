#include "seirvac/commands.hpp"

#include <chrono>
#include <future>
#include <ostream>
#include <sstream>

#include "seirvac/config.hpp"
#include "seirvac/io.hpp"

#ifndef SEIRVAC_VERSION
#define SEIRVAC_VERSION "unknown"
#endif

namespace seirvac {

const char* tool_version() { return SEIRVAC_VERSION; }

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string report_text(const RunResult& run) {
  std::ostringstream os;
  os << "# stability report\n";
  write_key_values(os, report_key_values(run.report));
  os << "\n# trajectory summary\n";
  write_key_values(os, summary_key_values(run.trajectory.summary));
  os << "\n# diagnostics\n";
  write_key_values(os, diagnostics_key_values(run.diagnostics));
  return os.str();
}

}  // namespace

std::vector<std::string> write_run_artifacts(const fs::path& dir, const RunResult& run,
                                             const std::string& config_path,
                                             double wall_seconds, bool write_dat) {
  fs::create_directories(dir);
  std::vector<std::string> files;
  {
    std::ostringstream os;
    write_trajectory_csv(os, run.trajectory);
    write_text_file(dir / "trajectory.csv", os.str());
    files.push_back("trajectory.csv");
  }
  if (write_dat) {
    std::ostringstream os;
    write_trajectory_dat(os, run.trajectory);
    write_text_file(dir / "trajectory.dat", os.str());
    files.push_back("trajectory.dat");
  }
  write_text_file(dir / "report.txt", report_text(run));
  files.push_back("report.txt");
  {
    std::ostringstream os;
    write_key_values_csv(os, report_key_values(run.report));
    write_text_file(dir / "report.csv", os.str());
    files.push_back("report.csv");
  }
  RunManifest m;
  m.config_path = config_path;
  m.config_echo = config_to_text(run.config);
  m.output_dir = dir.string();
  m.artifacts = files;
  m.tool_version = tool_version();
  m.wall_seconds = wall_seconds;
  std::ostringstream os;
  write_manifest(os, m);
  write_text_file(dir / "manifest.txt", os.str());
  files.push_back("manifest.txt");
  return files;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& err) {
  const auto start = Clock::now();
  ParsedConfig parsed;
  try {
    parsed = load_config(args.config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  for (const auto& d : parsed.defaults_applied) err << "default: " << d << '\n';

  RunResult run;
  try {
    run = run_and_certify(parsed.config);
  } catch (const NumericalAbort& e) {
    err << "numerical abort at t=" << format_double(e.time()) << ": " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "analysis failed: " << e.what() << '\n';
    return kExitNumerical;
  }

  try {
    write_run_artifacts(args.out_dir, run, args.config_path.string(), seconds_since(start),
                        args.write_dat);
  } catch (const std::exception& e) {
    err << "output error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  ParsedConfig parsed;
  try {
    parsed = load_config(args.config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  for (const auto& d : parsed.defaults_applied) err << "default: " << d << '\n';

  StabilityReport report;
  try {
    report = certify_config(parsed.config);
  } catch (const std::exception& e) {
    err << "analysis failed: " << e.what() << '\n';
    return kExitNumerical;
  }
  std::ostringstream os;
  write_key_values(os, report_key_values(report));
  out << os.str();
  if (args.report_path) {
    try {
      write_text_file(*args.report_path, os.str());
    } catch (const std::exception& e) {
      err << "output error: " << e.what() << '\n';
      return kExitIo;
    }
  }
  return kExitOk;
}

int cmd_scenarios(const ScenariosArgs& args, std::ostream& err) {
  const Scenario all[] = {Scenario::kA, Scenario::kB, Scenario::kC};
  struct Outcome {
    RunResult run;
    double seconds = 0.0;
  };
  std::vector<std::future<Outcome>> jobs;
  for (Scenario s : all) {
    jobs.push_back(std::async(std::launch::async, [s, &args] {
      const auto start = Clock::now();
      Outcome o;
      o.run = run_scenario(s, args.overrides);
      o.seconds = seconds_since(start);
      return o;
    }));
  }

  std::vector<Outcome> outcomes;
  int code = kExitOk;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    try {
      outcomes.push_back(jobs[j].get());
    } catch (const NumericalAbort& e) {
      err << "scenario " << to_string(all[j]) << ": numerical abort: " << e.what() << '\n';
      code = kExitNumerical;
    } catch (const std::exception& e) {
      err << "scenario " << to_string(all[j]) << ": " << e.what() << '\n';
      code = kExitNumerical;
    }
  }
  if (code != kExitOk) return code;

  try {
    std::ostringstream summary;
    summary << kSummaryHeader << '\n';
    for (std::size_t j = 0; j < outcomes.size(); ++j) {
      const std::string name = to_string(all[j]);
      const RunResult& run = outcomes[j].run;
      write_run_artifacts(args.out_dir / name, run, "preset:" + name, outcomes[j].seconds,
                          args.write_dat);
      const TrajectorySummary& s = run.trajectory.summary;
      summary << name << ',' << format_double(s.initial_err_norm) << ','
              << format_double(s.final_err_norm) << ',' << format_double(s.max_plant_drift)
              << ',' << format_double(s.max_observer_drift) << ','
              << s.plant_positivity_violations << ',' << s.observer_positivity_violations << ','
              << s.clamp_events << ',' << s.envelope_violations << ','
              << run.diagnostics.population_bound_violations << '\n';
    }
    write_text_file(args.out_dir / "summary.csv", summary.str());
  } catch (const std::exception& e) {
    err << "output error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace seirvac
