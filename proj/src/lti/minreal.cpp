#include "zwidth/lti/minreal.hpp"

#include <algorithm>

#include <Eigen/SVD>

namespace zwidth {
namespace {

// Left singular vectors of W whose singular values exceed thr.
Matrix range_basis(const Matrix& W, double thr) {
  if (W.cols() == 0 || W.rows() == 0) return Matrix(W.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(W, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  return svd.matrixU().leftCols(r);
}

}  // namespace

Matrix controllable_basis(const Matrix& A, const Matrix& B, double rel_tol, double shift) {
  const Eigen::Index n = A.rows();
  const double bnorm = B.norm();
  if (n == 0 || bnorm == 0.0) return Matrix(n, 0);
  const Matrix As = A - shift * Matrix::Identity(n, n);

  Matrix V = range_basis(B, rel_tol * bnorm);
  Matrix fresh = V;
  while (V.cols() < n && fresh.cols() > 0) {
    Matrix W = As * fresh;
    const double wnorm = W.norm();
    if (wnorm == 0.0) break;
    for (int pass = 0; pass < 2; ++pass) W -= V * (V.transpose() * W);
    fresh = range_basis(W, rel_tol * wnorm);
    if (fresh.cols() == 0) break;
    Matrix next(n, V.cols() + fresh.cols());
    next << V, fresh;
    V = std::move(next);
  }
  return V.leftCols(std::min<Eigen::Index>(V.cols(), n));
}

StateSpace minreal(const StateSpace& sys, double rel_tol) {
  const double shift = sys.domain().is_discrete() ? 1.0 : 0.0;
  const Matrix V = controllable_basis(sys.A(), sys.B(), rel_tol, shift);
  const Matrix A1 = V.transpose() * sys.A() * V;
  const Matrix B1 = V.transpose() * sys.B();
  const Matrix C1 = sys.C() * V;

  const Matrix W = controllable_basis(A1.transpose(), C1.transpose(), rel_tol, shift);
  return StateSpace(W.transpose() * A1 * W, W.transpose() * B1, C1 * W, sys.D(), sys.domain(),
                    sys.input_labels(), sys.output_labels());
}

}  // namespace zwidth
