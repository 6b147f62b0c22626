#include "zwidth/simulate/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "zwidth/error.hpp"

namespace zwidth {

namespace {
constexpr double kTwoPi = 2 * std::numbers::pi;
}

double Signal::at(double t) const {
  if (kind == Kind::Zero || t < t0) return 0.0;
  const double tau = t - t0;
  switch (kind) {
    case Kind::Step:
      return amplitude;
    case Kind::Sinusoid:
      return amplitude * std::sin(kTwoPi * f0 * tau);
    case Kind::Chirp: {
      if (tau > sweep_time) return 0.0;
      const double r = std::log(f1 / f0);
      return amplitude * std::sin(kTwoPi * f0 * sweep_time / r * (std::exp(r * tau / sweep_time) - 1.0));
    }
    case Kind::Zero:
      break;
  }
  return 0.0;
}

double Signal::frequency_at(double t) const {
  if (kind == Kind::Sinusoid) return f0;
  if (kind != Kind::Chirp) return 0.0;
  const double tau = std::clamp(t - t0, 0.0, sweep_time);
  return f0 * std::pow(f1 / f0, tau / sweep_time);
}

void SimConfig::validate() const {
  if (!(duration > 0) || !std::isfinite(duration)) throw InvalidParamsError("duration", "must be > 0");
  if (!(Ts > 0)) throw InvalidParamsError("Ts", "must be > 0");
  if (counts_per_rev < 1) throw InvalidParamsError("counts_per_rev", "must be >= 1");
  const double nyquist_hz = 0.5 / Ts;
  for (const auto& [label, s] : inputs) {
    if (s.kind == Signal::Kind::Chirp) {
      if (!(s.f0 > 0) || !(s.f1 > s.f0)) throw InvalidParamsError(label, "chirp needs 0 < f0 < f1");
      if (s.f1 > nyquist_hz) throw InvalidParamsError(label, "chirp f1 exceeds the Nyquist frequency");
      if (!(s.sweep_time > 0)) throw InvalidParamsError(label, "chirp sweep time must be > 0");
    }
    if (s.kind == Signal::Kind::Sinusoid && !(s.f0 > 0 && s.f0 <= nyquist_hz))
      throw InvalidParamsError(label, "sinusoid frequency must lie in (0, Nyquist]");
  }
}

const std::vector<double>& SimTrace::operator[](const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return channels[i];
  throw UnknownLabelError("trace has no channel '" + label + "'");
}

bool SimTrace::has(const std::string& label) const noexcept {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

SimTrace run_sim(const StateSpace& sys, const SimConfig& cfg) {
  cfg.validate();
  if (!sys.domain().is_discrete()) throw SampleTimeMismatchError("run_sim: system is continuous");
  if (std::abs(sys.domain().sample_time() - cfg.Ts) > 1e-12 * cfg.Ts)
    throw SampleTimeMismatchError(
        fmt::format("run_sim: system Ts {} differs from config Ts {}", sys.domain().sample_time(), cfg.Ts));

  const int m = sys.n_inputs(), p = sys.n_outputs();
  std::vector<std::pair<int, const Signal*>> drives;
  for (const auto& [label, s] : cfg.inputs) drives.emplace_back(sys.input_index(label), &s);

  // Inputs computed from the current outputs must not feed them back directly.
  int enc = -1, th = -1, tfr = -1, thm = -1;
  if (cfg.quantize_encoder) {
    enc = sys.input_index("enc_err");
    th = sys.output_index("thL1");
    if (sys.D()(th, enc) != 0.0) throw InvalidArgument("run_sim: thL1 depends directly on enc_err");
  }
  if (cfg.ripple) {
    tfr = sys.input_index("Tfr");
    thm = sys.output_index("thm");
    if (sys.D()(thm, tfr) != 0.0) throw InvalidArgument("run_sim: thm depends directly on Tfr");
  }

  std::vector<bool> active(static_cast<std::size_t>(m), false);
  for (const auto& [i, s] : drives) active[static_cast<std::size_t>(i)] = s->kind != Signal::Kind::Zero;
  if (enc >= 0) active[static_cast<std::size_t>(enc)] = true;
  if (tfr >= 0) active[static_cast<std::size_t>(tfr)] = true;

  const auto steps = static_cast<std::size_t>(std::floor(cfg.duration / cfg.Ts + 1e-9)) + 1;
  SimTrace tr;
  tr.time.resize(steps);
  tr.labels = sys.output_labels();
  std::vector<int> in_cols;
  for (int j = 0; j < m; ++j) {
    if (!active[static_cast<std::size_t>(j)]) continue;
    std::string name = sys.input_labels()[static_cast<std::size_t>(j)];
    if (sys.has_output(name)) name += "_in";
    tr.labels.push_back(name);
    in_cols.push_back(j);
  }
  tr.channels.assign(tr.labels.size(), std::vector<double>(steps));

  const double res = kTwoPi / cfg.counts_per_rev;
  Vector x = Vector::Zero(sys.n_states()), u(m), y(p);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * cfg.Ts;
    tr.time[k] = t;
    u.setZero();
    for (const auto& [i, s] : drives) u(i) = s->at(t);
    if (enc >= 0 || tfr >= 0) {
      const Vector y0 = sys.C() * x + sys.D() * u;
      if (enc >= 0) u(enc) = std::floor(y0(th) / res) * res - y0(th);
      if (tfr >= 0) u(tfr) += cfg.ripple->amplitude * std::sin(2.0 * y0(thm));
    }
    y.noalias() = sys.C() * x + sys.D() * u;
    for (int i = 0; i < p; ++i) tr.channels[static_cast<std::size_t>(i)][k] = y(i);
    for (std::size_t c = 0; c < in_cols.size(); ++c) tr.channels[static_cast<std::size_t>(p) + c][k] = u(in_cols[c]);
    x = sys.A() * x + sys.B() * u;
  }
  return tr;
}

StepMetrics step_metrics(const SimTrace& trace, const std::string& channel, double final_value, double t_start) {
  if (final_value == 0.0) throw InvalidArgument("step_metrics: final_value must be nonzero");
  const auto& y = trace[channel];
  const auto& t = trace.time;
  std::size_t k0 = 0;
  while (k0 < t.size() && t[k0] < t_start - 1e-12) ++k0;
  if (k0 == t.size()) throw InvalidArgument("step_metrics: t_start beyond the trace");

  const double band = 0.02 * std::abs(final_value);
  if (!std::isfinite(y.back()) || std::abs(y.back() - final_value) > band)
    throw NonConvergentError(fmt::format("step_metrics: {} does not settle to {}", channel, final_value));

  // Signals normalized so that the final value is +1.
  auto norm = [&](std::size_t k) { return y[k] / final_value; };
  std::optional<double> t10, t90;
  double peak = -INFINITY;
  std::size_t last_out = t.size();
  for (std::size_t k = k0; k < t.size(); ++k) {
    const double v = norm(k);
    if (!std::isfinite(v)) throw NonConvergentError("step_metrics: non-finite sample");
    if (!t10 && v >= 0.1) t10 = t[k];
    if (!t90 && v >= 0.9) t90 = t[k];
    peak = std::max(peak, v);
    if (std::abs(y[k] - final_value) > band) last_out = k;
  }
  StepMetrics m{};
  m.rise_time_10_90 = (t10 && t90) ? *t90 - *t10 : INFINITY;
  m.overshoot_pct = std::max(0.0, (peak - 1.0) * 100.0);
  m.settling_time_2pct = last_out == t.size() ? 0.0 : t[last_out + 1] - t[k0];
  return m;
}

ChirpEstimate chirp_response(const StateSpace& sys, const ChirpSpec& spec) {
  if (!(spec.f0_hz > 0) || spec.f1_hz < 10.0 * spec.f0_hz)
    throw InsufficientDurationError("chirp_response: the sweep must span at least one decade");
  if (spec.duration < 50.0 / spec.f0_hz)
    throw InsufficientDurationError("chirp_response: duration must cover 50 periods of f0");
  if (!sys.domain().is_discrete()) throw SampleTimeMismatchError("chirp_response: system must be discrete");

  SimConfig cfg;
  cfg.Ts = sys.domain().sample_time();
  cfg.duration = spec.duration;
  const Signal s = Signal::chirp(spec.amplitude, spec.f0_hz, spec.f1_hz, spec.duration);
  cfg.inputs[spec.input] = s;
  const SimTrace tr = run_sim(sys, cfg);
  const auto& y = tr[spec.output];
  const auto& t = tr.time;

  ChirpEstimate est;
  std::size_t k = 0;
  while (k < t.size()) {
    const double span = 3.0 / s.frequency_at(t[k]);
    std::size_t e = k;
    while (e + 1 < t.size() && t[e + 1] < t[k] + span) ++e;
    if (t[e] < t[k] + span - 2 * cfg.Ts) break;
    double ymin = INFINITY, ymax = -INFINITY, umin = INFINITY, umax = -INFINITY;
    for (std::size_t i = k; i <= e; ++i) {
      ymin = std::min(ymin, y[i]);
      ymax = std::max(ymax, y[i]);
      const double u = s.at(t[i]);
      umin = std::min(umin, u);
      umax = std::max(umax, u);
    }
    if (umax > umin) {
      est.freq_hz.push_back(s.frequency_at(0.5 * (t[k] + t[e])));
      est.gain.push_back((ymax - ymin) / (umax - umin));
    }
    k = e + 1;
  }
  return est;
}

}  // namespace zwidth
