#pragma once

#include "zwidth/lti/state_space.hpp"

namespace zwidth {

/// Default relative rank tolerance for minimal realization.
inline constexpr double kMinrealTolerance = 1e-7;

/// Removes uncontrollable then unobservable states by orthogonal staircase
/// reduction on A - cI, with c = 1 for discrete and c = 0 for continuous
/// systems. Each Krylov step keeps directions whose residual after
/// orthogonalization exceeds rel_tol times the step's norm. Labels and
/// domain are kept.
StateSpace minreal(const StateSpace& sys, double rel_tol = kMinrealTolerance);

/// Orthonormal basis of the controllable subspace of (A, B), built from
/// Krylov blocks of A - shift I.
Matrix controllable_basis(const Matrix& A, const Matrix& B, double rel_tol, double shift = 0.0);

}  // namespace zwidth
