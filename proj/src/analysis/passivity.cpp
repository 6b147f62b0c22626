#include "zwidth/analysis/passivity.hpp"

#include <cmath>
#include <numbers>

#include "zwidth/control/assembly.hpp"
#include "zwidth/error.hpp"
#include "zwidth/lti/frequency.hpp"
#include "zwidth/lti/minreal.hpp"

namespace zwidth {

namespace {

constexpr double kDeg = 180.0 / std::numbers::pi;

// Principal phase entering the test, before unwrapping.
double raw_phase(const ChannelResponse& y, double w, bool invert) {
  const double a = std::arg(y(w));
  double hold = 0.0;
  if (y.domain().is_discrete()) hold = w * y.domain().sample_time() / 2;
  return invert ? -a - hold : a + hold;
}

// Branch of `phase` (mod 2 pi) nearest to `ref`.
double nearest_branch(double phase, double ref) {
  return phase - 2 * std::numbers::pi * std::round((phase - ref) / (2 * std::numbers::pi));
}

std::vector<double> unwrapped(const ChannelResponse& y, const std::vector<double>& w, bool invert) {
  std::vector<double> ph(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double r = raw_phase(y, w[i], invert);
    ph[i] = i == 0 ? r : nearest_branch(r, ph[i - 1]);
  }
  return ph;
}

std::vector<double> test_grid(const TimeDomain& d, const PassivityOptions& opt) {
  const double hi = d.is_discrete() ? opt.hi_fraction * d.nyquist() : opt.continuous_hi_rad_s;
  return log_grid(opt.lo_rad_s, hi, opt.grid_points);
}

}  // namespace

std::vector<double> corrected_phase_deg(const StateSpace& Y, const std::vector<double>& w, bool invert) {
  const ChannelResponse y(Y, 0, 0);
  auto ph = unwrapped(y, w, invert);
  for (double& v : ph) v *= kDeg;
  return ph;
}

PassivityReport passivity_check(const StateSpace& Y, bool invert, const PassivityOptions& opt) {
  if (Y.n_inputs() != 1 || Y.n_outputs() != 1) throw DimensionError("passivity_check: port must be SISO");
  const ChannelResponse y(Y, 0, 0);
  const auto w = test_grid(Y.domain(), opt);
  const auto ph = unwrapped(y, w, invert);

  PassivityReport rep{};
  rep.poles_stable = Y.is_stable(opt.stability_tol);
  rep.corrected = Y.domain().is_discrete();
  const double limit = std::numbers::pi / 2;
  for (std::size_t i = 0; i < w.size(); ++i) {
    rep.max_abs_corrected_phase_deg = std::max(rep.max_abs_corrected_phase_deg, std::abs(ph[i]) * kDeg);
    if (rep.first_violation_rad_s || std::abs(ph[i]) <= limit) continue;
    if (i == 0) {
      rep.first_violation_rad_s = w[0];
      continue;
    }
    double lo = w[i - 1], hi = w[i];
    const double ref = ph[i - 1];
    while (hi - lo > opt.refine_tol_rad_s * std::max(1.0, lo)) {
      const double mid = 0.5 * (lo + hi);
      if (std::abs(nearest_branch(raw_phase(y, mid, invert), ref)) > limit)
        hi = mid;
      else
        lo = mid;
    }
    rep.first_violation_rad_s = hi;
  }
  rep.passive = rep.poles_stable && rep.max_abs_corrected_phase_deg <= 90.0;
  return rep;
}

PassivityReport passivity_check(const RationalTF& Y, bool invert, const PassivityOptions& opt) {
  if (!Y.is_proper()) throw ImproperSystemError("passivity_check: admittance must be proper");
  return passivity_check(tf_to_ss(Y), invert, opt);
}

PortAdmittance driving_port_admittance(const PlantParams& p, const LoopConfig& loop, const PortSpec& port) {
  const StateSpace cl = assemble_closed_loop(p, loop);
  StateSpace y = minreal(cl.channel(port.torque_input, port.velocity_output));
  RationalTF tf = ss_to_tf(y);
  return PortAdmittance{std::move(y), std::move(tf), cl.is_stable()};
}

}  // namespace zwidth
