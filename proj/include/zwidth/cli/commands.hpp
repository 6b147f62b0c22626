#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zwidth/cli/config.hpp"
#include "zwidth/cli/io.hpp"

namespace zwidth::cli {

enum class Command { Region, Passivity, Margins, Bandwidth, Step, Chirp, Table2 };

/// Throws ConfigError for an unknown name.
Command parse_command(const std::string& name);
const char* to_string(Command c) noexcept;

struct RunManifest {
  std::string config_path;  // empty: defaults only
  Command command = Command::Table2;
  std::string output_dir = "out";
  std::vector<std::string> overrides;
  bool force = false;
  int jobs = 1;
};

struct CommandOutput {
  FileSet files;
  /// Human-readable summary for stdout.
  std::string report;
};

/// Runs one command over every sweep variant. Nothing is written.
CommandOutput run_command(const RunConfig& cfg, Command cmd, int jobs = 1);

/// Reads the config, runs the command, writes the files and prints the
/// report. Returns 0 on success, 2 for configuration or validation errors
/// and 3 for numerical failures; diagnostics go to `err`.
int execute(const RunManifest& m, std::ostream& out, std::ostream& err);

enum class Verdict { Yes, No, Unstable };
const char* to_string(Verdict v) noexcept;

/// Passivity verdict of the interaction port for one configuration.
Verdict port_verdict(const PlantParams& p, const LoopConfig& loop);

struct Table2Row {
  std::string name;
  std::function<void(PlantParams&, LoopConfig&)> apply;
  /// Reference verdicts: torque loop, impedance (200, 10), impedance (20000, 50).
  std::array<Verdict, 3> reference;
};

/// The fifteen reference passivity rows, each a change from the nominal.
const std::vector<Table2Row>& table2_rows();

struct Table2Result {
  std::string name;
  std::array<Verdict, 3> got;
  std::array<Verdict, 3> reference;
  bool matches() const noexcept { return got == reference; }
};

/// Evaluates every row on top of the given nominal configuration.
std::vector<Table2Result> table2(const PlantParams& nominal_plant, const LoopConfig& nominal_loop);

}  // namespace zwidth::cli
