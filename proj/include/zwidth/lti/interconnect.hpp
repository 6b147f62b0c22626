#pragma once

#include <span>
#include <string>
#include <vector>

#include "zwidth/lti/state_space.hpp"

namespace zwidth {

/// Signal path from a block output to a block input, scaled by `gain`.
/// Several wires into the same input are summed.
struct Wire {
  std::string from;
  std::string to;
  double gain = 1.0;
};

/// Interconnects labeled blocks. Output labels must be unique across
/// blocks, and so must input labels. `inputs` lists block inputs kept as
/// exogenous channels (a listed input may also receive wires; the signals
/// add). `outputs` lists block outputs exposed, in the given order.
///
/// Throws DomainMismatchError, UnknownLabelError, IllPosedLoopError.
StateSpace connect(std::span<const StateSpace> blocks, std::span<const Wire> wires,
                   std::span<const std::string> inputs,
                   std::span<const std::string> outputs);

/// Block-diagonal stacking with no connections.
StateSpace append(std::span<const StateSpace> blocks);

}  // namespace zwidth
