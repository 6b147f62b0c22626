#include "zwidth/lti/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "zwidth/error.hpp"

namespace zwidth {

Vector balance_in_place(Matrix& m) {
  const Eigen::Index n = m.rows();
  Vector d = Vector::Ones(n);
  constexpr double radix = 2.0;
  bool converged = false;
  // Parlett-Reinsch iteration with power-of-two scalings (exact in binary).
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        d(i) *= f;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
  return d;
}

void sort_spectrum(Spectrum& s) {
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

Spectrum eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError(fmt::format("eigenvalues of non-square {}x{} matrix", m.rows(), m.cols()));
  }
  if (m.rows() == 0) return {};
  if (!m.allFinite()) throw NumericalError("eigenvalues: matrix has non-finite entries");
  Matrix work = m;
  balance_in_place(work);
  Eigen::EigenSolver<Matrix> es(work, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw NumericalError("eigenvalue iteration did not converge");
  Spectrum out(es.eigenvalues().begin(), es.eigenvalues().end());
  sort_spectrum(out);
  return out;
}

double spectral_radius(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  const auto ev = eigenvalues(m);
  return std::abs(ev.front());
}

Polynomial charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("charpoly of non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Polynomial::constant(1.0);
  Matrix h;
  if (n > 2) {
    Matrix work = m;
    balance_in_place(work);
    Eigen::HessenbergDecomposition<Matrix> hd(work);
    h = hd.matrixH();
  } else {
    h = m;
  }
  // p[k] = det(xI - H[0:k, 0:k]).
  std::vector<Polynomial> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  p.push_back(Polynomial::constant(1.0));
  for (Eigen::Index k = 1; k <= n; ++k) {
    const Eigen::Index c = k - 1;
    Polynomial pk = Polynomial{1.0, -h(c, c)} * p[static_cast<std::size_t>(c)];
    double prod = 1.0;
    for (Eigen::Index i = c - 1; i >= 0; --i) {
      prod *= h(i + 1, i);
      if (prod == 0.0) break;
      pk -= (h(i, c) * prod) * p[static_cast<std::size_t>(i)];
    }
    p.push_back(std::move(pk));
  }
  return p.back();
}

}  // namespace zwidth
