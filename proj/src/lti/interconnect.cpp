#include "zwidth/lti/interconnect.hpp"

#include <Eigen/LU>
#include <fmt/format.h>

#include "zwidth/error.hpp"

namespace zwidth {

StateSpace append(std::span<const StateSpace> blocks) {
  if (blocks.empty()) throw InvalidArgument("append: no blocks");
  Eigen::Index n = 0, m = 0, p = 0;
  for (const auto& b : blocks) {
    require_same_domain(blocks.front().domain(), b.domain(), "connect");
    n += b.n_states();
    m += b.n_inputs();
    p += b.n_outputs();
  }
  Matrix A = Matrix::Zero(n, n), B = Matrix::Zero(n, m), C = Matrix::Zero(p, n), D = Matrix::Zero(p, m);
  std::vector<std::string> in, out;
  Eigen::Index ni = 0, mi = 0, pi = 0;
  for (const auto& b : blocks) {
    const auto bn = b.n_states(), bm = b.n_inputs(), bp = b.n_outputs();
    A.block(ni, ni, bn, bn) = b.A();
    B.block(ni, mi, bn, bm) = b.B();
    C.block(pi, ni, bp, bn) = b.C();
    D.block(pi, mi, bp, bm) = b.D();
    in.insert(in.end(), b.input_labels().begin(), b.input_labels().end());
    out.insert(out.end(), b.output_labels().begin(), b.output_labels().end());
    ni += bn;
    mi += bm;
    pi += bp;
  }
  return StateSpace(std::move(A), std::move(B), std::move(C), std::move(D), blocks.front().domain(),
                    std::move(in), std::move(out));
}

StateSpace connect(std::span<const StateSpace> blocks, std::span<const Wire> wires,
                   std::span<const std::string> inputs, std::span<const std::string> outputs) {
  const StateSpace all = append(blocks);
  const auto n = all.n_states(), m = all.n_inputs(), p = all.n_outputs();

  Matrix K = Matrix::Zero(m, p);
  for (const auto& w : wires) K(all.input_index(w.to), all.output_index(w.from)) += w.gain;

  const auto ne = static_cast<Eigen::Index>(inputs.size());
  Matrix E = Matrix::Zero(m, ne);
  for (Eigen::Index j = 0; j < ne; ++j) E(all.input_index(inputs[static_cast<std::size_t>(j)]), j) = 1.0;

  const auto no = static_cast<Eigen::Index>(outputs.size());
  Matrix S = Matrix::Zero(no, p);
  for (Eigen::Index i = 0; i < no; ++i) S(i, all.output_index(outputs[static_cast<std::size_t>(i)])) = 1.0;

  // y = C x + D (K y + E w)  =>  (I - D K) y = C x + D E w.
  const Matrix M = Matrix::Identity(p, p) - all.D() * K;
  Eigen::FullPivLU<Matrix> lu(M);
  if (p > 0 && (!lu.isInvertible() || lu.rcond() < 1e-12)) {
    throw IllPosedLoopError(fmt::format("connect: algebraic loop is singular (rcond {:.3g})", p > 0 ? lu.rcond() : 0.0));
  }
  const Matrix Cy = p > 0 ? Matrix(lu.solve(all.C())) : Matrix(0, n);
  const Matrix Dy = p > 0 ? Matrix(lu.solve(all.D() * E)) : Matrix(0, ne);

  Matrix A = all.A() + all.B() * K * Cy;
  Matrix B = all.B() * (K * Dy + E);
  Matrix C = S * Cy;
  Matrix D = S * Dy;
  return StateSpace(std::move(A), std::move(B), std::move(C), std::move(D), all.domain(),
                    std::vector<std::string>(inputs.begin(), inputs.end()),
                    std::vector<std::string>(outputs.begin(), outputs.end()));
}

}  // namespace zwidth
