#pragma once

#include "zwidth/lti/linalg.hpp"
#include "zwidth/lti/state_space.hpp"

namespace zwidth {

/// exp(M) by scaling and squaring with a degree-13 Pade approximant.
/// Throws NumericalError when the result is not finite.
Matrix expm(const Matrix& m);

/// Zero-order-hold discretization through the augmented exponential
///   exp([A B; 0 0] Ts) = [Ad Bd; 0 I].
/// C, D and labels are carried over unchanged.
StateSpace c2d_zoh(const StateSpace& sys, double Ts);

}  // namespace zwidth
