#pragma once

#include <string>
#include <vector>

#include "zwidth/control/config.hpp"
#include "zwidth/lti/rational_tf.hpp"
#include "zwidth/lti/state_space.hpp"
#include "zwidth/plant/plant.hpp"

namespace zwidth {

namespace loop_io {
/// theta_ref: impedance set point. Tff: torque added to the torque reference.
/// Vff: voltage added to the controller output. enc_err: additive error on
/// the measured link position (encoder quantization).
inline const std::vector<std::string> kInputs = {"theta_ref", "Tff", "Vff", "Tdist", "Tfr", "enc_err"};
inline const std::vector<std::string> kOutputs = {"Tl",   "thL1", "dthL1", "Vm",      "thm",
                                                  "dthm", "thL2", "dthL2", "vel_filt"};
}  // namespace loop_io

/// Sampled closed loop: ZOH plant at Ts, PI torque loop, velocity
/// compensation, averaging filter and impedance law, each closed according
/// to `loop`. Open loops leave their controller signal unused; the label
/// sets of `loop_io` are always present.
StateSpace assemble_closed_loop(const PlantParams& p, const LoopConfig& loop);

enum class BreakPoint { TorqueError, ImpedanceError };

/// Loop transfer function L at a summing junction with every other loop
/// closed as configured, in the negative-feedback convention (the closed
/// loop is 1 + L). The broken loop itself is treated as closed.
StateSpace assemble_loop_gain_ss(const PlantParams& p, const LoopConfig& loop, BreakPoint at);
/// Minimal-realized rational form of `assemble_loop_gain_ss`.
RationalTF assemble_loop_gain(const PlantParams& p, const LoopConfig& loop, BreakPoint at);

const char* to_string(BreakPoint b) noexcept;

}  // namespace zwidth
