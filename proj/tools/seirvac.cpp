#include <iostream>

#include <CLI11.hpp>

#include "seirvac/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Observer-based vaccination control simulator for the SEIR model"};
  app.set_version_flag("--version", seirvac::tool_version());
  app.require_subcommand(1);

  seirvac::SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run one configuration and write its artifacts");
  simulate->add_option("--config", sim.config_path, "Configuration file")->required();
  simulate->add_option("--out", sim.out_dir, "Output directory")->required();
  simulate->add_flag("--dat", sim.write_dat, "Also write a whitespace-separated trajectory.dat");

  seirvac::AnalyzeArgs ana;
  std::string report_path;
  auto* analyze = app.add_subcommand("analyze", "Certify the configured gains without simulating");
  analyze->add_option("--config", ana.config_path, "Configuration file")->required();
  analyze->add_option("--report", report_path, "Also write the report to this file");

  seirvac::ScenariosArgs scen;
  double duration = 0.0;
  double dt = 0.0;
  auto* scenarios = app.add_subcommand("scenarios", "Run the A, B and C presets");
  scenarios->add_option("--out", scen.out_dir, "Output directory")->required();
  scenarios->add_flag("--dat", scen.write_dat, "Also write trajectory.dat files");
  scenarios->add_option("--duration", duration, "Override the horizon in days");
  scenarios->add_option("--dt", dt, "Override the step in days");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : seirvac::kExitConfig;
  }

  if (*simulate) return seirvac::cmd_simulate(sim, std::cerr);
  if (*analyze) {
    if (!report_path.empty()) ana.report_path = report_path;
    return seirvac::cmd_analyze(ana, std::cout, std::cerr);
  }
  if (duration > 0.0) scen.overrides.duration = duration;
  if (dt > 0.0) scen.overrides.dt = dt;
  return seirvac::cmd_scenarios(scen, std::cerr);
}
