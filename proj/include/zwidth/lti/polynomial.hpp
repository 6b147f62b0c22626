#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace zwidth {

/// Real polynomial stored with coefficients in descending degree order,
/// i.e. {1, -3, 2} is x^2 - 3x + 2.
///
/// Construction strips exactly-zero leading coefficients only. Physical
/// polynomials in this toolkit span more than twelve decades in coefficient
/// magnitude, so relative trimming is an explicit step (`trimmed`).
class Polynomial {
 public:
  /// Relative threshold used by `trimmed()` when no tolerance is given.
  static constexpr double kTrimTolerance = 1e-12;

  /// The zero polynomial.
  Polynomial() = default;
  explicit Polynomial(std::vector<double> descending);
  Polynomial(std::initializer_list<double> descending);

  static Polynomial constant(double c) { return Polynomial{c}; }
  /// The monomial x.
  static Polynomial x() { return Polynomial{1.0, 0.0}; }
  /// Monic polynomial with the given roots; complex roots must come in
  /// conjugate pairs (imaginary residue is discarded).
  static Polynomial from_roots(std::span<const std::complex<double>> roots,
                               double gain = 1.0);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; 0 for constants and (by convention) for the zero polynomial.
  int degree() const noexcept;
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k (0 beyond the degree).
  double coeff(int k) const noexcept;
  double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.front(); }
  double max_abs_coeff() const noexcept;
  double norm() const noexcept;

  double operator()(double x) const noexcept;
  std::complex<double> operator()(std::complex<double> x) const noexcept;

  Polynomial derivative() const;
  /// Drops leading coefficients with |c| <= rel_tol * max|c|.
  Polynomial trimmed(double rel_tol = kTrimTolerance) const;
  /// Divides by the leading coefficient. Throws ZeroPolynomialError.
  Polynomial monic() const;

  /// All `degree()` roots, via eigenvalues of the balanced companion matrix.
  /// Throws ZeroPolynomialError for the zero polynomial and InvalidArgument
  /// for constants.
  std::vector<std::complex<double>> roots() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double k);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, double k) { return a *= k; }
  friend Polynomial operator*(double k, Polynomial a) { return a *= k; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void strip();
  std::vector<double> coeffs_;
};

/// Free-function form used by the numerical core.
std::vector<std::complex<double>> poly_roots(const Polynomial& p);

}  // namespace zwidth
