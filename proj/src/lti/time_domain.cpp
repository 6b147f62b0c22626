#include "zwidth/lti/time_domain.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "zwidth/error.hpp"

namespace zwidth {

TimeDomain TimeDomain::discrete(double Ts) {
  if (!(Ts > 0.0) || !std::isfinite(Ts)) {
    throw InvalidArgument(fmt::format("sample time must be positive, got {}", Ts));
  }
  TimeDomain d;
  d.Ts_ = Ts;
  return d;
}

double TimeDomain::sample_time() const {
  if (!Ts_) throw DomainMismatchError("continuous-time system has no sample time");
  return *Ts_;
}

double TimeDomain::nyquist() const noexcept {
  return Ts_ ? std::numbers::pi / *Ts_ : std::numeric_limits<double>::infinity();
}

std::complex<double> TimeDomain::point(double w) const noexcept {
  if (!Ts_) return {0.0, w};
  return std::polar(1.0, w * *Ts_);
}

std::string TimeDomain::describe() const {
  return Ts_ ? fmt::format("discrete(Ts={:g})", *Ts_) : std::string("continuous");
}

void require_same_domain(const TimeDomain& a, const TimeDomain& b, const char* context) {
  if (!(a == b)) {
    throw DomainMismatchError(
        fmt::format("{}: {} vs {}", context, a.describe(), b.describe()));
  }
}

}  // namespace zwidth
