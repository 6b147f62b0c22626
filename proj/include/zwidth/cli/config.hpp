#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zwidth/analysis/region.hpp"
#include "zwidth/control/assembly.hpp"
#include "zwidth/control/config.hpp"
#include "zwidth/plant/plant.hpp"

namespace zwidth::cli {

/// Parameter lists swept by the commands, plus grid and scan settings.
/// Empty lists keep the base value.
struct SweepSpec {
  std::vector<double> beta;
  std::vector<double> alpha;
  std::vector<double> Ts;
  std::vector<int> Nav;
  AxisSpec p_axis = kDefaultPAxis;
  AxisSpec d_axis = kDefaultDAxis;
  BreakPoint break_point = BreakPoint::ImpedanceError;
  double low_pm_deg = 30.0;
  double k_min = 1.0;
  double k_max = 1e5;
  int k_points = 400;
};

struct SimSection {
  double duration = 30.0;
  double step_amplitude = 1.0;
  bool quantize = false;
  double ripple_amplitude = 0.0;
  double chirp_f0 = 0.5;
  double chirp_f1 = 50.0;
  double chirp_duration = 200.0;
  double chirp_amplitude = 1.0;
};

struct RunConfig {
  PlantParams plant;
  LoopConfig loop;
  SweepSpec sweep;
  SimSection sim;
};

/// One point of the sweep product, with a file-name tag such as
/// "beta2_alpha0.5" ("nominal" when nothing is swept).
struct Variant {
  std::string tag;
  PlantParams plant;
  LoopConfig loop;
};

/// Parses sectioned key = value text. Command-line overrides of the form
/// "section.key=value" take precedence over the text, which takes
/// precedence over the defaults. Unknown sections or keys, duplicate keys
/// and malformed values raise ParseError; constraint violations raise
/// InvalidParamsError naming the field.
RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {},
                       const std::string& origin = "config");

/// Cartesian product of the sweep lists in the order beta, alpha, Ts, Nav.
std::vector<Variant> expand_variants(const RunConfig& cfg);

}  // namespace zwidth::cli
