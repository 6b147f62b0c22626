#include "zwidth/lti/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "zwidth/error.hpp"
#include "zwidth/lti/linalg.hpp"

namespace zwidth {

Polynomial::Polynomial(std::vector<double> descending) : coeffs_(std::move(descending)) {
  strip();
}

Polynomial::Polynomial(std::initializer_list<double> descending) : coeffs_(descending) {
  strip();
}

void Polynomial::strip() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](double c) { return c != 0.0; });
  coeffs_.erase(coeffs_.begin(), first);
}

Polynomial Polynomial::from_roots(std::span<const std::complex<double>> roots, double gain) {
  // Complex accumulation, real part kept at the end.
  std::vector<std::complex<double>> c{1.0};
  for (const auto& r : roots) {
    std::vector<std::complex<double>> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= c[i] * r;
    }
    c = std::move(next);
  }
  std::vector<double> out(c.size());
  std::transform(c.begin(), c.end(), out.begin(), [gain](auto v) { return gain * v.real(); });
  return Polynomial(std::move(out));
}

int Polynomial::degree() const noexcept {
  return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
}

double Polynomial::coeff(int k) const noexcept {
  const int d = degree();
  if (coeffs_.empty() || k < 0 || k > d) return 0.0;
  return coeffs_[static_cast<std::size_t>(d - k)];
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::norm() const noexcept {
  double s = 0.0;
  for (double c : coeffs_) s += c * c;
  return std::sqrt(s);
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (double c : coeffs_) acc = acc * x + c;
  return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> x) const noexcept {
  std::complex<double> acc = 0.0;
  for (double c : coeffs_) acc = acc * x + c;
  return acc;
}

Polynomial Polynomial::derivative() const {
  const int d = degree();
  if (d == 0) return {};
  std::vector<double> out(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)] * (d - i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::trimmed(double rel_tol) const {
  const double thr = rel_tol * max_abs_coeff();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [thr](double c) { return std::abs(c) > thr; });
  return Polynomial(std::vector<double>(first, coeffs_.end()));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw ZeroPolynomialError("monic() of the zero polynomial");
  return *this * (1.0 / leading());
}

std::vector<std::complex<double>> Polynomial::roots() const {
  if (is_zero()) throw ZeroPolynomialError("roots of the zero polynomial");
  if (degree() == 0) throw InvalidArgument("roots of a constant polynomial");

  // Exact zero roots come from trailing zero coefficients.
  std::vector<double> c = coeffs_;
  std::size_t zeros = 0;
  while (c.size() > 1 && c.back() == 0.0) {
    c.pop_back();
    ++zeros;
  }
  std::vector<std::complex<double>> out(zeros, 0.0);

  const int n = static_cast<int>(c.size()) - 1;
  if (n == 1) {
    out.emplace_back(-c[1] / c[0], 0.0);
  } else if (n > 1) {
    Matrix comp = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j) comp(0, j) = -c[static_cast<std::size_t>(j + 1)] / c[0];
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    auto ev = eigenvalues(comp);
    out.insert(out.end(), ev.begin(), ev.end());
  }
  sort_spectrum(out);
  return out;
}

Polynomial Polynomial::operator-() const { return *this * -1.0; }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) {
    coeffs_.insert(coeffs_.begin(), o.coeffs_.size() - coeffs_.size(), 0.0);
  }
  const std::size_t off = coeffs_.size() - o.coeffs_.size();
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[off + i] += o.coeffs_[i];
  strip();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(double k) {
  for (double& c : coeffs_) c *= k;
  strip();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

std::vector<std::complex<double>> poly_roots(const Polynomial& p) { return p.roots(); }

}  // namespace zwidth
