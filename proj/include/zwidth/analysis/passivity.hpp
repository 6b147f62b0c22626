#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zwidth/control/config.hpp"
#include "zwidth/lti/rational_tf.hpp"
#include "zwidth/lti/state_space.hpp"
#include "zwidth/plant/plant.hpp"

namespace zwidth {

/// Interaction-port admittance of the closed loop: port torque in, port
/// velocity out. Both forms describe the same minimal realization; the
/// state-space form is the one evaluated numerically.
struct PortAdmittance {
  StateSpace ss;
  RationalTF tf;
  /// Stability of the full closed loop, hidden modes included.
  bool closed_loop_stable;
};

struct PortSpec {
  std::string torque_input = "Tdist";
  std::string velocity_output = "dthL2";
};

PortAdmittance driving_port_admittance(const PlantParams& p, const LoopConfig& loop, const PortSpec& port = {});

struct PassivityReport {
  bool poles_stable;
  double max_abs_corrected_phase_deg;
  std::optional<double> first_violation_rad_s;
  bool passive;
  /// True when the half-sample hold correction was applied.
  bool corrected;
};

struct PassivityOptions {
  int grid_points = 4000;
  double lo_rad_s = 1e-2;
  /// Upper end as a fraction of Nyquist (discrete systems).
  double hi_fraction = 0.999;
  /// Upper end for continuous systems.
  double continuous_hi_rad_s = 1e5;
  double stability_tol = 1e-9;
  /// Bisection width for locating the first violation.
  double refine_tol_rad_s = 1e-9;
};

/// Positive-real test. Discrete Y: stable poles and |arg Z - w Ts/2| <= 90
/// on the grid, with Z = 1/Y when `invert`; without `invert` the phase of Y
/// plus w Ts/2 is tested, which has the same magnitude. Continuous Y: plain
/// phase test without correction. Throws ImproperSystemError for an
/// improper rational Y.
PassivityReport passivity_check(const StateSpace& Y, bool invert = true, const PassivityOptions& opt = {});
PassivityReport passivity_check(const RationalTF& Y, bool invert = true, const PassivityOptions& opt = {});

/// Unwrapped phase in degrees, corrected as in `passivity_check`.
std::vector<double> corrected_phase_deg(const StateSpace& Y, const std::vector<double>& w, bool invert = true);

}  // namespace zwidth
