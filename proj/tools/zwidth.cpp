#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zwidth/cli/commands.hpp"
#include "zwidth/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Torque and impedance loop analysis for a series-elastic joint"};
  zwidth::cli::RunManifest m;
  std::string command;
  app.add_option("command", command, "region | passivity | margins | bandwidth | step | chirp | table2")->required();
  app.add_option("--config", m.config_path, "Configuration file");
  app.add_option("--out", m.output_dir, "Output directory")->capture_default_str();
  app.add_option("--set", m.overrides, "Override section.key=value (repeatable)");
  app.add_flag("--force", m.force, "Overwrite existing output files");
  app.add_option("--jobs", m.jobs, "Worker threads for region sweeps")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    m.command = zwidth::cli::parse_command(command);
  } catch (const zwidth::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return zwidth::cli::execute(m, std::cout, std::cerr);
}
