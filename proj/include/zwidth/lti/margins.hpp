#pragma once

#include <optional>

#include "zwidth/lti/frequency.hpp"
#include "zwidth/lti/rational_tf.hpp"
#include "zwidth/lti/state_space.hpp"

namespace zwidth {

/// Classical stability margins of a loop transfer function.
struct MarginReport {
  /// Minimum over phase crossovers; +inf when the phase never reaches -180.
  double gain_margin_db;
  /// Minimum over gain crossovers; empty when |L| never crosses 1.
  std::optional<double> phase_margin_deg;
  std::optional<double> gain_crossover_hz;
  std::optional<double> phase_crossover_hz;
};

struct MarginOptions {
  int grid_points = kDefaultGridPoints;
  /// Crossing refinement stops once the bracket is narrower than this.
  double bisection_tol_rad_s = 1e-10;
  /// Highest frequency for continuous loops.
  double continuous_hi_rad_s = 1e4;
};

/// Margins of a loop given by its frequency response on `domain`.
/// Phase margin is the angular distance from -1 at the gain crossover,
/// 180 - |arg L|, so it lies in [0, 180].
MarginReport margins(const ResponseFn& loop, const TimeDomain& domain,
                     const MarginOptions& opt = {});
/// Throws ImproperSystemError when the loop is improper.
MarginReport margins(const RationalTF& loop, const MarginOptions& opt = {});
MarginReport margins(const StateSpace& loop, const MarginOptions& opt = {});

}  // namespace zwidth
