#pragma once

// Independent reference computations used only by the test suites. Nothing
// here calls into the library's numerical core.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace oracle {

using cd = std::complex<double>;

/// Horner evaluation of descending real coefficients.
inline cd horner(const std::vector<double>& c, cd x) {
  cd acc = 0.0;
  for (double v : c) acc = acc * x + v;
  return acc;
}

/// Aberth-Ehrlich simultaneous iteration. Descending coefficients, nonzero
/// leading coefficient.
inline std::vector<cd> aberth_roots(std::vector<double> c, int max_iter = 500) {
  const double lead = c.front();
  for (double& v : c) v /= lead;
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<double> dc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) dc[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] * (n - i);
  // Initial guesses on a circle of Cauchy-bound radius.
  double r = 0.0;
  for (int i = 1; i <= n; ++i) r = std::max(r, std::pow(std::abs(c[static_cast<std::size_t>(i)]), 1.0 / i));
  std::vector<cd> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(r, 2 * std::numbers::pi * k / n + 0.4);
  for (int it = 0; it < max_iter; ++it) {
    double moved = 0.0;
    for (int k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      const cd p = horner(c, zk);
      if (p == 0.0) continue;
      const cd ratio = p / horner(dc, zk);
      cd s = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
      const cd step = ratio / (1.0 - ratio * s);
      zk -= step;
      moved = std::max(moved, std::abs(step) / std::max(1.0, std::abs(zk)));
    }
    if (moved < 1e-15) break;
  }
  return z;
}

/// Faddeev-LeVerrier characteristic polynomial det(xI - M), descending.
inline std::vector<double> faddeev_leverrier(const Eigen::MatrixXd& m) {
  const auto n = m.rows();
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0;
  Eigen::MatrixXd Mk = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Mk = m * Mk + c[static_cast<std::size_t>(k - 1)] * Eigen::MatrixXd::Identity(n, n);
    c[static_cast<std::size_t>(k)] = -(m * Mk).trace() / static_cast<double>(k);
  }
  return c;
}

/// Largest distance between two multisets under greedy nearest matching.
inline double multiset_distance(std::vector<cd> a, std::vector<cd> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  std::vector<bool> used(b.size(), false);
  // Match the most isolated points first.
  for (const auto& x : a) {
    double best = INFINITY;
    std::size_t bj = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        bj = j;
      }
    }
    used[bj] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

/// Max |a_i - b_j| / scale over the greedy matching.
inline double multiset_relative_distance(const std::vector<cd>& a, const std::vector<cd>& b, double scale) {
  return multiset_distance(a, b) / scale;
}

inline Eigen::MatrixXd random_matrix(std::mt19937& rng, int rows, int cols, double sd = 1.0) {
  std::normal_distribution<double> nd(0.0, sd);
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = nd(rng);
  return m;
}

}  // namespace oracle
