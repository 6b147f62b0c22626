#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "zwidth/lti/linalg.hpp"
#include "zwidth/lti/rational_tf.hpp"
#include "zwidth/lti/state_space.hpp"

namespace zwidth {

/// Default number of points on analysis grids.
inline constexpr int kDefaultGridPoints = 2000;
/// Lowest analysis frequency, rad/s.
inline constexpr double kGridLowRadS = 1e-2;

/// n log-spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);

/// Log grid from 1e-2 rad/s to `fraction` * Nyquist (discrete) or to
/// `continuous_hi` (continuous).
std::vector<double> analysis_grid(const TimeDomain& domain,
                                  int n = kDefaultGridPoints,
                                  double fraction = 1.0,
                                  double continuous_hi = 1e4);

/// Evaluates one SISO channel of a state-space model at many frequencies.
/// A is reduced once to Hessenberg form so each point costs O(n^2).
class ChannelResponse {
 public:
  ChannelResponse(const StateSpace& sys, int input, int output);
  ChannelResponse(const StateSpace& sys, const std::string& input,
                  const std::string& output);

  std::complex<double> operator()(double w) const;
  const TimeDomain& domain() const noexcept { return domain_; }

 private:
  TimeDomain domain_;
  Matrix H_;          // Q^T A Q, upper Hessenberg
  ComplexVector b_;   // Q^T b
  ComplexVector c_;   // c Q
  std::complex<double> d_;
};

/// Frequency response of a SISO map given as a callable of w.
using ResponseFn = std::function<std::complex<double>(double)>;

ResponseFn response_of(const RationalTF& g);
ResponseFn response_of(const StateSpace& sys, int input = 0, int output = 0);

/// Checks w against the Nyquist limit; throws FrequencyAboveNyquistError.
void check_nyquist(const TimeDomain& domain, double w);

/// freq_response on a grid; for state-space models returns the (input,
/// output) channel.
std::vector<std::complex<double>> freq_response(const RationalTF& g,
                                                std::span<const double> w);
std::vector<std::complex<double>> freq_response(const StateSpace& sys,
                                                std::span<const double> w,
                                                int input = 0, int output = 0);

}  // namespace zwidth
