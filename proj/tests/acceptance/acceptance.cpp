// Acceptance checks; one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/LU>
#include <fmt/format.h>

#include "oracles.hpp"
#include "zwidth/analysis/passivity.hpp"
#include "zwidth/analysis/performance.hpp"
#include "zwidth/analysis/region.hpp"
#include "zwidth/cli/commands.hpp"
#include "zwidth/control/assembly.hpp"
#include "zwidth/control/blocks.hpp"
#include "zwidth/lti/discretize.hpp"
#include "zwidth/lti/frequency.hpp"
#include "zwidth/lti/linalg.hpp"
#include "zwidth/lti/margins.hpp"
#include "zwidth/lti/rational_tf.hpp"
#include "zwidth/plant/plant.hpp"
#include "zwidth/simulate/simulate.hpp"

using namespace zwidth;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const std::string& id, const std::string& name, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  failures += !o.pass;
  std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", id.c_str(), name.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

LoopConfig torque_only(double alpha = 0.94) {
  LoopConfig c;
  c.vc.alpha = alpha;
  return c;
}

LoopConfig impedance(double P, double D) {
  LoopConfig c;
  c.impedance_closed = true;
  c.imp = {P, D};
  return c;
}

struct Sweep {
  RegionGrid grid;
  double seconds;
};

Sweep sweep(const LoopConfig& loop) {
  const auto t0 = Clock::now();
  RegionGrid g = stability_region(PlantParams{}, loop, kDefaultPAxis.values(), kDefaultDAxis.values());
  return {std::move(g), seconds_since(t0)};
}

int total(const RegionGrid& g) {
  return count_unstable(g, [](double, double) { return true; });
}

// Random proper rational function with stable poles, degree 1..5.
RationalTF random_tf(std::mt19937& rng) {
  std::normal_distribution<double> nd;
  const int n = std::uniform_int_distribution<int>(1, 5)(rng);
  const int m = std::uniform_int_distribution<int>(0, n)(rng);
  std::vector<std::complex<double>> poles;
  for (int i = 0; i < n;) {
    if (i + 1 < n && nd(rng) > 0) {
      const std::complex<double> p(-0.2 - std::abs(nd(rng)), std::abs(nd(rng)) + 0.1);
      poles.push_back(p);
      poles.push_back(std::conj(p));
      i += 2;
    } else {
      poles.emplace_back(-0.2 - std::abs(nd(rng)), 0.0);
      ++i;
    }
  }
  std::vector<double> num(static_cast<std::size_t>(m) + 1);
  for (double& c : num) c = nd(rng);
  return RationalTF(Polynomial(num), Polynomial::from_roots(poles, 1.0 + std::abs(nd(rng))),
                    TimeDomain::continuous());
}

}  // namespace

int main() {
  const PlantParams nominal;

  report("C1", "passivity table reproduction", [] {
    const auto t0 = Clock::now();
    const auto rows = cli::table2(PlantParams{}, LoopConfig{});
    const double dt = seconds_since(t0);
    int match = 0;
    std::string off;
    for (const auto& r : rows) {
      if (r.matches()) {
        ++match;
        continue;
      }
      off += " " + r.name + "(";
      for (int c = 0; c < 3; ++c) off += std::string(c ? "/" : "") + cli::to_string(r.got[static_cast<std::size_t>(c)]);
      off += ")";
    }
    const int n = static_cast<int>(rows.size());
    const bool ok = match >= n - 2 && dt < 60.0;
    return Outcome{ok, fmt::format("{}/{} rows match (at most 2 mismatches allowed), {:.2f} s (< 60 s){}", match, n,
                                   dt, off.empty() ? "" : "; mismatched:" + off)};
  });

  report("C2", "passivity violation band", [&] {
    const auto torque = passivity_check(driving_port_admittance(nominal, torque_only()).ss);
    const auto imp = passivity_check(driving_port_admittance(nominal, impedance(200, 10)).ss);
    const double w = torque.first_violation_rad_s.value_or(NAN);
    const bool ok = w >= 10.0 && w <= 50.0 && imp.max_abs_corrected_phase_deg <= 90.0 && imp.poles_stable;
    return Outcome{ok, fmt::format("torque loop first violation {:.3f} rad/s (in [10, 50]); impedance (200,10) max "
                                   "|corrected phase| {:.4f} deg (<= 90)",
                                   w, imp.max_abs_corrected_phase_deg)};
  });

  report("C3", "coupled-environment window", [&] {
    const auto loop = torque_only();
    const bool k1000 = coupled_environment_stability(nominal, loop, 1000.0);
    const bool k10 = coupled_environment_stability(nominal, loop, 10.0);
    const bool k10000 = coupled_environment_stability(nominal, loop, 10000.0);
    const auto win = instability_windows(nominal, loop);
    bool bracket = win.size() == 1;
    std::string ws;
    for (const auto& w : win) ws += fmt::format(" [{:.1f}, {:.1f}]", w.lo, w.hi);
    if (bracket) bracket = win[0].lo >= 36.0 && win[0].lo <= 144.0 && win[0].hi >= 1750.0 && win[0].hi <= 7000.0;
    const bool ok = !k1000 && k10 && k10000 && bracket;
    return Outcome{ok, fmt::format("K=1000 {}, K=10 {}, K=10000 {}; unstable window{} (factor 2 of [72, 3500])",
                                   k1000 ? "stable" : "unstable", k10 ? "stable" : "unstable",
                                   k10000 ? "stable" : "unstable", ws.empty() ? " none" : ws)};
  });

  {
    std::vector<std::string> timing;
    double worst = 0.0;
    auto run = [&](const std::string& name, LoopConfig loop) {
      Sweep s = sweep(loop);
      worst = std::max(worst, s.seconds);
      timing.push_back(fmt::format("{} {:.1f}s", name, s.seconds));
      return s.grid;
    };
    auto beta_loop = [](double b) {
      LoopConfig l = torque_only();
      l.pi.beta = b;
      return l;
    };
    auto ts_loop = [](double ts) {
      LoopConfig l = torque_only();
      l.set_Ts(ts);
      return l;
    };
    try {
      const auto b1 = run("beta1", beta_loop(1.0));
      const auto b6 = run("beta6", beta_loop(6.0));
      const auto t6 = run("Ts6ms", ts_loop(6e-3));
      const auto t8 = run("Ts8ms", ts_loop(8e-3));
      const auto a0 = run("alpha0", torque_only(0.0));
      const auto a05 = run("alpha0.5", torque_only(0.5));
      const auto a12 = run("alpha1.2", torque_only(1.2));

      const Quadrant low = [](double P, double D) { return P < 2000.0 && D < 10.0; };
      const Quadrant high = [](double P, double) { return P > 10000.0; };
      report("C4a", "region trend, low quadrant vs beta", [&] {
        const int a = count_unstable(b1, low), b = count_unstable(b6, low);
        return Outcome{b < a, fmt::format("unstable cells with P<2000, D<10: beta=1 {}, beta=6 {} (strict decrease)", a, b)};
      });
      report("C4b", "region trend, high stiffness vs beta", [&] {
        const int a = count_unstable(b1, high), b = count_unstable(b6, high);
        return Outcome{b > a, fmt::format("unstable cells with P>10000: beta=1 {}, beta=6 {} (strict increase)", a, b)};
      });
      report("C4c", "region trend vs sampling time", [&] {
        const int a = total(b1), b = total(t6), c = total(t8);
        return Outcome{a < b && b < c, fmt::format("unstable cells: Ts=1ms {}, 6ms {}, 8ms {} (increasing)", a, b, c)};
      });
      report("C4d", "region trend vs alpha", [&] {
        const int a = total(a0), b = total(a05), c = total(b1), d = total(a12);
        const bool ok = a <= b && b <= c && c <= d && a < d;
        return Outcome{ok, fmt::format("unstable cells: alpha=0 {}, 0.5 {}, 0.94 {}, 1.2 {} (non-decreasing, overall "
                                       "increase)",
                                       a, b, c, d)};
      });
      std::string t;
      for (const auto& s : timing) t += (t.empty() ? "" : ", ") + s;
      report("C4t", "region sweep runtime", [&] {
        return Outcome{worst < 60.0, fmt::format("120x60 sweeps: {} (each < 60 s)", t)};
      });
    } catch (const std::exception& e) {
      report("C4", "region trends", [&] { return Outcome{false, std::string("exception: ") + e.what()}; });
    }
  }

  report("C5", "velocity-compensation effect", [&] {
    SimConfig sc;
    sc.duration = 30.0;
    sc.inputs["Tff"] = Signal::step(1.0);
    const auto with = step_metrics(run_sim(assemble_closed_loop(nominal, torque_only(0.94)), sc), "Tl", 1.0);
    const auto without = step_metrics(run_sim(assemble_closed_loop(nominal, torque_only(0.0)), sc), "Tl", 1.0);
    const double ratio = with.settling_time_2pct / without.settling_time_2pct;
    const auto bw_with = torque_bandwidth(nominal, torque_only(0.94));
    const auto bw_without = torque_bandwidth(nominal, torque_only(0.0));
    const bool ok = ratio <= 0.7 && bw_with.rad_s > bw_without.rad_s;
    return Outcome{ok, fmt::format("2% settling {:.2f} s vs {:.2f} s without compensation ({:.0f}% smaller, >= 30%); "
                                   "torque bandwidth {:.2f} vs {:.2f} rad/s",
                                   with.settling_time_2pct, without.settling_time_2pct, 100 * (1 - ratio),
                                   bw_with.rad_s, bw_without.rad_s)};
  });

  report("C6", "zero cancellation", [] {
    double worst_res = 0.0, worst_den = 0.0;
    for (const auto& p : {PlantParams::extended(), PlantParams::retracted()}) {
      VelCompConfig full;
      full.alpha = 1.0;
      full.mode = VcMode::Full;
      const RationalTF vc = vc_gain(p, full);
      const auto poly = build_p1q1q2q3(p);
      worst_res = std::max(worst_res, vc_residual(p, vc).norm() / poly.q2.norm());
      const Polynomial den = gtvc_rational(p, vc).denominator();
      const Polynomial ref = poly.p1 * poly.q1;
      const Polynomial diff = (1.0 / den.leading()) * den - (1.0 / ref.leading()) * ref;
      worst_den = std::max(worst_den, diff.norm() / ((1.0 / ref.leading()) * ref).norm());
    }
    const bool ok = worst_res <= 1e-9 && worst_den <= 1e-9;
    return Outcome{ok, fmt::format("residual norm {:.2e} relative, denominator vs p1*q1 {:.2e} relative (<= 1e-9, "
                                   "both legs)",
                                   worst_res, worst_den)};
  });

  report("C7", "torque-loop margins", [] {
    std::string d;
    bool ok = true;
    for (const auto& [name, p] : {std::pair{"extended", PlantParams::extended()}, std::pair{"retracted", PlantParams::retracted()}}) {
      const auto m = margins(assemble_loop_gain_ss(p, torque_only(), BreakPoint::TorqueError));
      const double pm = m.phase_margin_deg.value_or(NAN);
      ok = ok && pm > 30.0 && m.gain_margin_db > 12.0;
      d += fmt::format("{}{} PM {:.1f} deg, GM {:.1f} dB", d.empty() ? "" : "; ", name, pm, m.gain_margin_db);
    }
    return Outcome{ok, d + " (PM > 30, GM > 12)"};
  });

  report("C8", "numerical-core oracle suite", [] {
    const auto t0 = Clock::now();
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    int bad_map = 0, bad_dual = 0, bad_tf = 0, bad_zoh = 0;
    const int N = 100;
    for (int it = 0; it < N; ++it) {
      {  // Spectral mapping.
        const Matrix a = oracle::random_matrix(rng, 4, 4);
        const double T = 0.01 + uni(rng);
        const StateSpace sys(a, Matrix::Ones(4, 1), Matrix::Ones(1, 4), Matrix::Zero(1, 1), TimeDomain::continuous());
        std::vector<std::complex<double>> mapped;
        for (const auto& ev : eigenvalues(a)) mapped.push_back(std::exp(T * ev));
        double scale = 1.0;
        for (const auto& v : mapped) scale = std::max(scale, std::abs(v));
        bad_map += oracle::multiset_distance(eigenvalues(c2d_zoh(sys, T).A()), mapped) > 1e-8 * scale;
      }
      {  // Root/eigen duality.
        const int n = 2 + it % 5;
        const Matrix m = oracle::random_matrix(rng, n, n);
        const auto eig = eigenvalues(m);
        double scale = 1.0;
        for (const auto& v : eig) scale = std::max(scale, std::abs(v));
        const auto fl = oracle::faddeev_leverrier(m);
        const auto cp = charpoly(m);
        double cdiff = 0.0;
        for (int k = 0; k <= n; ++k) cdiff = std::max(cdiff, std::abs(cp.coeff(n - k) - fl[static_cast<std::size_t>(k)]));
        bad_dual += oracle::multiset_distance(poly_roots(cp), eig) > 1e-7 * scale ||
                    oracle::multiset_distance(oracle::aberth_roots(fl), eig) > 1e-7 * scale ||
                    cdiff > 1e-9 * std::pow(scale, n);
      }
      {  // TF/SS equivalence against direct Horner evaluation.
        const RationalTF g = random_tf(rng);
        const StateSpace ss = tf_to_ss(g);
        const RationalTF back = ss_to_tf(ss);
        bool ok = true;
        for (double w : log_grid(0.05, 50.0, 40)) {
          const std::complex<double> s(0.0, w);
          const auto ref = oracle::horner(g.numerator().coefficients(), s) / oracle::horner(g.denominator().coefficients(), s);
          const double tol = 1e-6 * std::abs(ref) + 1e-12;
          ok = ok && std::abs(ss.evaluate(s)(0, 0) - ref) <= tol && std::abs(back.at_frequency(w) - ref) <= tol;
        }
        bad_tf += !ok;
      }
      {  // ZOH closed form through an explicit eigenbasis.
        const int n = 2 + it % 3;
        const Matrix V = Matrix::Identity(n, n) + 0.3 * oracle::random_matrix(rng, n, n);
        Vector lam(n);
        for (int i = 0; i < n; ++i) lam(i) = -3.0 + 4.0 * uni(rng);
        const Matrix Vi = V.inverse();
        const Matrix A = V * lam.asDiagonal() * Vi;
        const Matrix B = oracle::random_matrix(rng, n, 1);
        const double T = 0.001 + 0.5 * uni(rng);
        Vector e(n), f(n);
        for (int i = 0; i < n; ++i) {
          e(i) = std::exp(lam(i) * T);
          f(i) = std::abs(lam(i)) < 1e-12 ? T : std::expm1(lam(i) * T) / lam(i);
        }
        const Matrix Ad = V * e.asDiagonal() * Vi;
        const Matrix Bd = V * f.asDiagonal() * Vi * B;
        const StateSpace d = c2d_zoh(StateSpace(A, B, Matrix::Ones(1, n), Matrix::Zero(1, 1), TimeDomain::continuous()), T);
        bad_zoh += (d.A() - Ad).norm() > 1e-9 * Ad.norm() || (d.B() - Bd).norm() > 1e-9 * std::max(Bd.norm(), 1e-300);
      }
    }
    const double dt = seconds_since(t0);
    const bool ok = bad_map + bad_dual + bad_tf + bad_zoh == 0 && dt < 30.0;
    return Outcome{ok, fmt::format("{} instances: failures spectral-mapping {}, root/eigen {}, tf/ss {}, zoh {}; "
                                   "{:.2f} s (< 30 s)",
                                   N, bad_map, bad_dual, bad_tf, bad_zoh, dt)};
  });

  std::printf("%s\n", failures ? fmt::format("{} criteria failed", failures).c_str() : "all criteria passed");
  return failures ? 1 : 0;
}
