#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zwidth/lti/state_space.hpp"

namespace zwidth {

/// Input signal of one channel.
struct Signal {
  enum class Kind { Zero, Step, Chirp, Sinusoid };
  Kind kind = Kind::Zero;
  double amplitude = 0.0;
  /// Step: switching time. Chirp and sinusoid: start time.
  double t0 = 0.0;
  /// Chirp: exponential sweep from f0 to f1 Hz over `sweep_time` seconds.
  /// Sinusoid: frequency f0 Hz.
  double f0 = 0.0;
  double f1 = 0.0;
  double sweep_time = 0.0;

  static Signal step(double amplitude, double t0 = 0.0) { return {Kind::Step, amplitude, t0}; }
  static Signal sinusoid(double amplitude, double hz, double t0 = 0.0) {
    return {Kind::Sinusoid, amplitude, t0, hz};
  }
  static Signal chirp(double amplitude, double f0_hz, double f1_hz, double sweep_time, double t0 = 0.0) {
    return {Kind::Chirp, amplitude, t0, f0_hz, f1_hz, sweep_time};
  }

  double at(double t) const;
  /// Instantaneous frequency in Hz (chirp and sinusoid), 0 otherwise.
  double frequency_at(double t) const;
};

struct RippleSpec {
  /// Peak torque, Nm.
  double amplitude = 0.0;
};

struct SimConfig {
  double duration = 1.0;
  double Ts = 1e-3;
  /// Signals keyed by input label; missing inputs are zero.
  std::map<std::string, Signal> inputs;
  /// Floor the measured link position to 2 pi / counts_per_rev, through
  /// the `enc_err` input.
  bool quantize_encoder = false;
  int counts_per_rev = 80000;
  /// Harmonic-drive ripple Tfr = amplitude sin(2 thm), through `Tfr`.
  std::optional<RippleSpec> ripple;

  void validate() const;
};

struct SimTrace {
  std::vector<double> time;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> channels;

  /// Throws UnknownLabelError.
  const std::vector<double>& operator[](const std::string& label) const;
  bool has(const std::string& label) const noexcept;
};

/// x[k+1] = A x + B u, y = C x + D u from x = 0. The trace holds every
/// output followed by every active input; an input whose label equals an
/// output label is stored as "<label>_in".
/// Throws SampleTimeMismatchError, UnknownLabelError.
SimTrace run_sim(const StateSpace& sys, const SimConfig& cfg);

struct StepMetrics {
  double rise_time_10_90;
  double overshoot_pct;
  double settling_time_2pct;
};

/// Standard step metrics of `channel` toward `final_value`; times are
/// measured from `t_start`. Settling is the end of the last interval spent
/// outside the 2% band. Throws NonConvergentError when the final sample is
/// outside the band, InvalidArgument when final_value is 0.
StepMetrics step_metrics(const SimTrace& trace, const std::string& channel, double final_value,
                         double t_start = 0.0);

struct ChirpSpec {
  std::string input;
  std::string output;
  double amplitude = 1.0;
  double f0_hz = 0.5;
  double f1_hz = 50.0;
  double duration = 100.0;
};

struct ChirpEstimate {
  std::vector<double> freq_hz;
  std::vector<double> gain;
};

/// Empirical amplitude ratio of output to input over consecutive windows of
/// three instantaneous periods of an exponential chirp.
/// Throws InsufficientDurationError when the sweep spans less than a decade
/// or lasts less than 50 periods of f0.
ChirpEstimate chirp_response(const StateSpace& sys, const ChirpSpec& spec);

}  // namespace zwidth
