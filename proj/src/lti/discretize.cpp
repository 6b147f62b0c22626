#include "zwidth/lti/discretize.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "zwidth/error.hpp"

namespace zwidth {

Matrix expm(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("expm of non-square matrix");
  if (m.rows() == 0) return m;
  if (!m.allFinite()) throw NumericalError("expm: non-finite input");
  Matrix out = m.exp();
  if (!out.allFinite()) throw NumericalError("expm: result overflowed");
  return out;
}

StateSpace c2d_zoh(const StateSpace& sys, double Ts) {
  if (!sys.domain().is_continuous()) throw DomainMismatchError("c2d_zoh expects a continuous-time system");
  const TimeDomain dom = TimeDomain::discrete(Ts);
  const auto n = sys.n_states(), m = sys.n_inputs();
  Matrix M = Matrix::Zero(n + m, n + m);
  M.topLeftCorner(n, n) = sys.A() * Ts;
  M.topRightCorner(n, m) = sys.B() * Ts;
  const Matrix phi = expm(M);
  return StateSpace(phi.topLeftCorner(n, n), phi.topRightCorner(n, m), sys.C(), sys.D(), dom,
                    sys.input_labels(), sys.output_labels());
}

}  // namespace zwidth
