#include "zwidth/analysis/performance.hpp"

#include <cmath>

#include "zwidth/control/assembly.hpp"
#include "zwidth/error.hpp"
#include "zwidth/lti/frequency.hpp"

namespace zwidth {

bool coupled_environment_stability(const PlantParams& p, const LoopConfig& loop, double K_env, double tol) {
  if (!(K_env >= 0)) throw InvalidParamsError("K_env", "must be >= 0");
  PlantParams q = p;
  q.KL2 += K_env;
  return assemble_closed_loop(q, loop).is_stable(tol);
}

std::vector<StiffnessWindow> instability_windows(const PlantParams& p, const LoopConfig& loop, double k_lo,
                                                 double k_hi, int scan_points) {
  const auto k = log_grid(k_lo, k_hi, scan_points);
  auto unstable = [&](double K) { return !coupled_environment_stability(p, loop, K); };
  // Edge between a and b (log-bisection), returning the unstable side.
  auto edge = [&](double a, double b, bool a_unstable) {
    while (b / a - 1.0 > 1e-9) {
      const double mid = std::sqrt(a * b);
      (unstable(mid) == a_unstable ? a : b) = mid;
    }
    return a_unstable ? a : b;
  };
  std::vector<StiffnessWindow> out;
  std::vector<bool> u(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) u[i] = unstable(k[i]);
  for (std::size_t i = 0; i < k.size();) {
    if (!u[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < k.size() && u[j + 1]) ++j;
    const double lo = i == 0 ? k.front() : edge(k[i - 1], k[i], false);
    const double hi = j + 1 == k.size() ? k.back() : edge(k[j], k[j + 1], true);
    out.push_back({lo, hi});
    i = j + 1;
  }
  return out;
}

Bandwidth bandwidth(const StateSpace& sys, const std::string& input, const std::string& output) {
  const ChannelResponse h(sys, input, output);
  const double thr = std::pow(10.0, -3.0 / 20.0);
  const auto& d = sys.domain();
  const double hi = d.is_discrete() ? d.nyquist() : 1e6;
  const auto w = log_grid(kGridLowRadS, hi, 4000);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (std::abs(h(w[i])) >= thr) continue;
    if (i == 0) return {w[0], false};
    double lo = w[i - 1], up = w[i];
    while (up - lo > 1e-10 * up) {
      const double mid = 0.5 * (lo + up);
      (std::abs(h(mid)) < thr ? up : lo) = mid;
    }
    return {up, false};
  }
  return {hi, true};
}

Bandwidth torque_bandwidth(const PlantParams& p, const LoopConfig& loop, std::optional<double> KL2_override) {
  if (!loop.torque_closed) throw ConfigError("torque_bandwidth: torque loop must be closed");
  PlantParams q = p;
  if (KL2_override) q.KL2 = *KL2_override;
  LoopConfig l = loop;
  l.impedance_closed = false;
  return bandwidth(assemble_closed_loop(q, l), "Tff", "Tl");
}

}  // namespace zwidth
