#include "zwidth/lti/rational_tf.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "zwidth/error.hpp"
#include "zwidth/lti/frequency.hpp"
#include "zwidth/lti/linalg.hpp"

namespace zwidth {

RationalTF::RationalTF(Polynomial num, Polynomial den, TimeDomain domain)
    : num_(std::move(num)), den_(std::move(den)), domain_(domain) {
  if (den_.is_zero()) throw ZeroPolynomialError("transfer function denominator is the zero polynomial");
}

bool RationalTF::is_proper() const noexcept { return num_.is_zero() || num_.degree() <= den_.degree(); }
bool RationalTF::is_strictly_proper() const noexcept { return num_.is_zero() || num_.degree() < den_.degree(); }
int RationalTF::relative_degree() const noexcept { return den_.degree() - (num_.is_zero() ? 0 : num_.degree()); }

std::complex<double> RationalTF::evaluate(std::complex<double> p) const { return num_(p) / den_(p); }

std::complex<double> RationalTF::at_frequency(double w) const {
  check_nyquist(domain_, w);
  return evaluate(domain_.point(w));
}

std::vector<std::complex<double>> RationalTF::freq_response(std::span<const double> w) const {
  std::vector<std::complex<double>> out;
  out.reserve(w.size());
  for (double wi : w) out.push_back(at_frequency(wi));
  return out;
}

Spectrum RationalTF::zeros() const {
  if (num_.is_zero() || num_.degree() == 0) return {};
  return num_.roots();
}

std::complex<double> RationalTF::dc_gain() const {
  return evaluate(domain_.is_discrete() ? std::complex<double>(1.0) : std::complex<double>(0.0));
}

RationalTF RationalTF::cancelled(double tol) const {
  if (num_.is_zero()) return RationalTF(Polynomial{}, Polynomial::constant(1.0), domain_);
  if (num_.degree() == 0 || den_.degree() == 0) return *this;
  Spectrum z = num_.roots();
  Spectrum p = den_.roots();
  std::vector<bool> zused(z.size(), false), pused(p.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double best = tol;
    std::size_t bj = p.size();
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (pused[j]) continue;
      const double d = std::abs(z[i] - p[j]);
      if (d <= best) {
        best = d;
        bj = j;
      }
    }
    if (bj < p.size()) {
      zused[i] = pused[bj] = true;
      any = true;
    }
  }
  if (!any) return *this;
  Spectrum zk, pk;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (!zused[i]) zk.push_back(z[i]);
  for (std::size_t j = 0; j < p.size(); ++j)
    if (!pused[j]) pk.push_back(p[j]);
  const double k = num_.leading() / den_.leading();
  return RationalTF(Polynomial::from_roots(zk, k), Polynomial::from_roots(pk), domain_);
}

RationalTF RationalTF::normalized() const {
  const double s = 1.0 / den_.leading();
  return RationalTF(num_ * s, den_ * s, domain_);
}

RationalTF series(const RationalTF& a, const RationalTF& b) {
  require_same_domain(a.domain(), b.domain(), "series");
  return RationalTF(a.numerator() * b.numerator(), a.denominator() * b.denominator(), a.domain()).cancelled();
}

RationalTF parallel(const RationalTF& a, const RationalTF& b) {
  require_same_domain(a.domain(), b.domain(), "parallel");
  return RationalTF(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                    a.denominator() * b.denominator(), a.domain());
}

RationalTF feedback(const RationalTF& fwd, const RationalTF& back, int sign) {
  require_same_domain(fwd.domain(), back.domain(), "feedback");
  if (sign != 1 && sign != -1) throw InvalidArgument("feedback sign must be +1 or -1");
  Polynomial den = fwd.denominator() * back.denominator() -
                   static_cast<double>(sign) * (fwd.numerator() * back.numerator());
  if (den.trimmed().is_zero()) throw IllPosedLoopError("feedback: closed-loop denominator vanishes");
  return RationalTF(fwd.numerator() * back.denominator(), std::move(den), fwd.domain()).cancelled();
}

StateSpace tf_to_ss(const RationalTF& g, const std::string& input, const std::string& output) {
  if (!g.is_proper()) throw ImproperSystemError("tf_to_ss: improper transfer function");
  const Polynomial den = g.denominator().monic();
  const Polynomial num = g.numerator() * (1.0 / g.denominator().leading());
  const int n = den.degree();
  const double d = num.coeff(n);
  const Polynomial r = num - d * den;
  Matrix A = Matrix::Zero(n, n), B = Matrix::Zero(n, 1), C = Matrix::Zero(1, n), D(1, 1);
  D(0, 0) = d;
  for (int j = 0; j < n; ++j) {
    A(0, j) = -den.coeff(n - 1 - j);
    C(0, j) = r.coeff(n - 1 - j);
  }
  for (int i = 1; i < n; ++i) A(i, i - 1) = 1.0;
  if (n > 0) B(0, 0) = 1.0;
  return StateSpace(std::move(A), std::move(B), std::move(C), std::move(D), g.domain(), {input}, {output});
}

RationalTF ss_to_tf(const StateSpace& sys, int input, int output) {
  if (input < 0 || input >= sys.n_inputs() || output < 0 || output >= sys.n_outputs()) {
    throw DimensionError(fmt::format("ss_to_tf: channel ({}, {}) out of range", input, output));
  }
  const double d = sys.D()(output, input);
  if (sys.n_states() == 0) return RationalTF::gain(d, sys.domain());
  const Matrix& A = sys.A();
  const Matrix bc = sys.B().col(input) * sys.C().row(output);
  const Polynomial den = charpoly(A);
  const Polynomial num = (charpoly(A - bc) - den + d * den).trimmed();
  return RationalTF(num, den, sys.domain());
}

}  // namespace zwidth
