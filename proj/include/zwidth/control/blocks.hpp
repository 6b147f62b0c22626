#pragma once

#include "zwidth/control/config.hpp"
#include "zwidth/lti/rational_tf.hpp"
#include "zwidth/lti/state_space.hpp"
#include "zwidth/plant/plant.hpp"

namespace zwidth {

inline constexpr double kGravity = 9.81;

/// PI(z) = Pt + It Ts z / (z - 1).
RationalTF pi_tf(const TorquePIConfig& cfg);
RationalTF pi_tf(double Pt, double It, double Ts);
/// x[k+1] = x[k] + It Ts e[k], u[k] = x[k] + (Pt + It Ts) e[k].
StateSpace pi_ss(const TorquePIConfig& cfg, const std::string& input, const std::string& output);

/// Simplified: alpha N (R Bm + kt kw) / kt. Full: (N/kt)(Ls + R)(Jm s + Bm) + N kw,
/// an improper polynomial compensator for continuous analysis only.
RationalTF vc_gain(const PlantParams& p, const VelCompConfig& cfg);
/// Scalar gain of the simplified compensator.
double vc_simplified_gain(const PlantParams& p, double alpha);

/// (1 - z^-Nav) / (Nav Ts).
RationalTF averaging_filter_tf(const AveragingFilterConfig& cfg);
/// Delay-line realization of the averaging filter with Nav states.
StateSpace averaging_filter_ss(const AveragingFilterConfig& cfg, const std::string& input,
                               const std::string& output);

/// Pgain (theta_ref - thL1) - Dgain v.
double impedance_law(const ImpedanceConfig& cfg, double position_error, double velocity);

/// (JL1 + JL2) ddtheta_ref + m g l_com sin(thL2).
double inverse_dynamics_ff(const PlantParams& p, double m, double l_com, double thL2, double ddtheta_ref);

}  // namespace zwidth
