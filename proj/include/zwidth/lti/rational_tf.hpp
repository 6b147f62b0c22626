#pragma once

#include <complex>
#include <span>
#include <vector>

#include "zwidth/lti/polynomial.hpp"
#include "zwidth/lti/state_space.hpp"
#include "zwidth/lti/time_domain.hpp"

namespace zwidth {

/// SISO rational transfer function num(p)/den(p) in s or z.
class RationalTF {
 public:
  /// Absolute root distance below which a pole and a zero cancel.
  static constexpr double kCancelTolerance = 1e-9;

  /// Throws ZeroPolynomialError when the denominator is zero.
  RationalTF(Polynomial num, Polynomial den, TimeDomain domain);

  static RationalTF gain(double k, TimeDomain domain) {
    return RationalTF(Polynomial::constant(k), Polynomial::constant(1.0), domain);
  }

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  const TimeDomain& domain() const noexcept { return domain_; }

  bool is_proper() const noexcept;
  bool is_strictly_proper() const noexcept;
  /// Relative degree deg(den) - deg(num) (negative when improper).
  int relative_degree() const noexcept;

  std::complex<double> evaluate(std::complex<double> p) const;
  /// Value at w rad/s; throws FrequencyAboveNyquistError for discrete
  /// systems when w exceeds pi/Ts.
  std::complex<double> at_frequency(double w) const;
  std::vector<std::complex<double>> freq_response(std::span<const double> w) const;

  Spectrum poles() const { return den_.roots(); }
  Spectrum zeros() const;
  /// Value at s=0 or z=1.
  std::complex<double> dc_gain() const;

  /// Cancels pole/zero pairs closer than tol and rebuilds from roots.
  RationalTF cancelled(double tol = kCancelTolerance) const;
  /// Scales so the denominator is monic.
  RationalTF normalized() const;

 private:
  Polynomial num_, den_;
  TimeDomain domain_;
};

/// a * b with pole-zero cancellation at `RationalTF::kCancelTolerance`.
RationalTF series(const RationalTF& a, const RationalTF& b);
RationalTF parallel(const RationalTF& a, const RationalTF& b);
/// fwd / (1 - sign * fwd * back). sign = -1 is negative feedback.
/// Throws IllPosedLoopError if the closed-loop denominator vanishes.
RationalTF feedback(const RationalTF& fwd, const RationalTF& back, int sign = -1);

/// Controllable canonical realization. Throws ImproperSystemError.
StateSpace tf_to_ss(const RationalTF& g, const std::string& input = "u",
                    const std::string& output = "y");

/// Transfer function of one channel of a state-space model:
/// num = det(pI - A + b c) - det(pI - A) + d det(pI - A).
RationalTF ss_to_tf(const StateSpace& sys, int input = 0, int output = 0);

}  // namespace zwidth
