#pragma once

#include <complex>
#include <optional>
#include <string>

namespace zwidth {

/// Continuous time, or discrete time with a fixed sample interval in seconds.
class TimeDomain {
 public:
  static TimeDomain continuous() { return TimeDomain{}; }
  /// Throws InvalidArgument unless Ts > 0 and finite.
  static TimeDomain discrete(double Ts);

  bool is_continuous() const noexcept { return !Ts_.has_value(); }
  bool is_discrete() const noexcept { return Ts_.has_value(); }
  /// Sample interval; throws when continuous.
  double sample_time() const;
  /// pi / Ts for discrete domains, +inf for continuous ones.
  double nyquist() const noexcept;

  /// Evaluation point of the transform variable at angular frequency w:
  /// s = jw, or z = exp(jwTs).
  std::complex<double> point(double w) const noexcept;

  std::string describe() const;

  friend bool operator==(const TimeDomain&, const TimeDomain&) = default;

 private:
  TimeDomain() = default;
  std::optional<double> Ts_;
};

/// Throws DomainMismatchError if the two domains differ.
void require_same_domain(const TimeDomain& a, const TimeDomain& b,
                         const char* context);

}  // namespace zwidth
