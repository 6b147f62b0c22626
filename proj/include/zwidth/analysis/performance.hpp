#pragma once

#include <optional>
#include <vector>

#include "zwidth/control/config.hpp"
#include "zwidth/lti/state_space.hpp"
#include "zwidth/plant/plant.hpp"

namespace zwidth {

/// Closed loop with an environment spring K_env added at the leg (the KL2
/// port); true when every eigenvalue is strictly inside the unit circle.
bool coupled_environment_stability(const PlantParams& p, const LoopConfig& loop, double K_env, double tol = 1e-9);

struct StiffnessWindow {
  double lo;
  double hi;
};

/// Maximal intervals of K_env in [k_lo, k_hi] where the coupled loop is
/// unstable, from a log scan refined by bisection on each edge.
std::vector<StiffnessWindow> instability_windows(const PlantParams& p, const LoopConfig& loop, double k_lo = 1.0,
                                                 double k_hi = 1e5, int scan_points = 400);

struct Bandwidth {
  double rad_s;
  /// The response never fell below -3 dB up to Nyquist; rad_s is Nyquist.
  bool nyquist_limited;
};

/// First frequency where |H| drops below -3 dB of the unit reference.
Bandwidth bandwidth(const StateSpace& sys, const std::string& input, const std::string& output);

/// Torque bandwidth Tl/Tl_ref with the torque loop closed and the impedance
/// loop open, evaluated with KL2 replaced by `KL2_override` (free motion by
/// default). Throws ConfigError when the torque loop is open.
Bandwidth torque_bandwidth(const PlantParams& p, const LoopConfig& loop, std::optional<double> KL2_override = 0.0);

}  // namespace zwidth
