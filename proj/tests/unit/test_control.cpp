#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zwidth/control/assembly.hpp"
#include "zwidth/control/blocks.hpp"
#include "zwidth/error.hpp"
#include "zwidth/lti/discretize.hpp"
#include "zwidth/lti/frequency.hpp"
#include "zwidth/lti/margins.hpp"

using namespace zwidth;

namespace {

LoopConfig torque_only() { return LoopConfig{}; }

LoopConfig impedance(double P, double D, double beta = 1.0) {
  LoopConfig c;
  c.pi.beta = beta;
  c.impedance_closed = true;
  c.imp = {P, D};
  return c;
}

}  // namespace

TEST_CASE("PI controller") {
  const auto g = pi_tf(TorquePIConfig{1.0, 0.001});
  CHECK(g.numerator().coeff(1) == doctest::Approx(0.4));
  REQUIRE(g.zeros().size() == 1);
  CHECK(g.zeros()[0].real() == doctest::Approx(0.955).epsilon(1e-12));
  CHECK(g.poles()[0].real() == 1.0);
  for (double beta : {0.5, 2.0, 6.0}) {
    const auto z = pi_tf(TorquePIConfig{beta, 0.001}).zeros();
    CHECK(z[0].real() == doctest::Approx(0.955).epsilon(1e-12));
  }
  const auto two = pi_tf(TorquePIConfig{2.0, 0.001});
  CHECK(two.numerator().coeff(1) == doctest::Approx(0.8));
  const auto c = pi_tf(1.0, 0.0, 0.001);
  CHECK(c.numerator().degree() == 0);
  CHECK(c.denominator().degree() == 0);
  CHECK(c.dc_gain().real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(pi_tf(TorquePIConfig{0.0, 0.001}), InvalidParamsError);
}

TEST_CASE("PI state-space realization matches the transfer function") {
  const TorquePIConfig cfg{1.5, 0.002};
  const auto ss = pi_ss(cfg, "e", "u");
  const auto tf = pi_tf(cfg);
  for (double w : {0.3, 10.0, 1000.0}) CHECK(std::abs(ss.evaluate(ss.domain().point(w))(0, 0) - tf.at_frequency(w)) < 1e-12);
}

TEST_CASE("velocity compensation gain") {
  const PlantParams p;
  CHECK(vc_gain(p, {1.0}).dc_gain().real() == doctest::Approx(21.621052631578947).epsilon(1e-14));
  CHECK(vc_gain(p, {0.0}).dc_gain().real() == 0.0);
  PlantParams q;
  q.L = 1e-300;
  q.Jm = 1e-300;
  const auto full = vc_gain(q, {1.0, VcMode::Full});
  CHECK(full.numerator().trimmed().degree() == 0);
  CHECK(full.dc_gain().real() == doctest::Approx(vc_gain(q, {1.0}).dc_gain().real()).epsilon(1e-14));
  CHECK(vc_gain(p, {1.0, VcMode::Full}).numerator().degree() == 2);
}

TEST_CASE("averaging filter") {
  SUBCASE("first difference") {
    const auto g = averaging_filter_tf({1, 0.001});
    CHECK(g.numerator() == Polynomial{1.0, -1.0});
    CHECK(g.denominator() == Polynomial{0.001, 0.0});
  }
  SUBCASE("ramp input gives the slope exactly") {
    const AveragingFilterConfig cfg{4, 0.001};
    const auto f = averaging_filter_ss(cfg, "th", "v");
    const double v = 2.5;
    Vector x = Vector::Zero(f.n_states());
    double y = 0;
    for (int k = 0; k < 20; ++k) {
      const double th = v * k * cfg.Ts;
      y = (f.C() * x)(0) + f.D()(0, 0) * th;
      x = f.A() * x + f.B().col(0) * th;
    }
    CHECK(y == doctest::Approx(v).epsilon(1e-12));
  }
  SUBCASE("low-frequency gain and delay") {
    const AveragingFilterConfig cfg{4, 0.001};
    const auto g = averaging_filter_tf(cfg);
    const auto d1 = averaging_filter_tf({1, 0.001});
    CHECK(std::abs(g.at_frequency(1e-4)) < 1e-3);
    // Phase-slope measurement relative to the first difference.
    const double w1 = 1.0, w2 = 2.0;
    auto rel = [&](double w) { return std::arg(g.at_frequency(w) / d1.at_frequency(w)); };
    const double delay = -(rel(w2) - rel(w1)) / (w2 - w1);
    CHECK(delay == doctest::Approx((cfg.Nav - 1) * cfg.Ts / 2).epsilon(1e-6));
    const auto ss = averaging_filter_ss(cfg, "th", "v");
    for (double w : {0.5, 100.0, 3000.0})
      CHECK(std::abs(ss.evaluate(ss.domain().point(w))(0, 0) - g.at_frequency(w)) < 1e-9 * std::abs(g.at_frequency(w)));
  }
  CHECK_THROWS_AS(averaging_filter_tf({0, 0.001}), InvalidParamsError);
}

TEST_CASE("impedance law and feedforward") {
  CHECK(impedance_law({200, 10}, 0.1, 0.0) == doctest::Approx(20.0));
  CHECK(impedance_law({200, 10}, 0.0, 1.0) == doctest::Approx(-10.0));
  CHECK(impedance_law({200, 10}, 0.05, 0.5) == doctest::Approx(5.0));
  const PlantParams p;
  CHECK(inverse_dynamics_ff(p, 1.0, 1.0, 0.0, 0.0) == 0.0);
  CHECK(inverse_dynamics_ff(p, 0.0, 0.0, 0.0, 1.0) == doctest::Approx(0.4391));
  CHECK(inverse_dynamics_ff(p, 1.0, 1.0, std::numbers::pi / 2, 0.0) == doctest::Approx(9.81));
  CHECK_THROWS_AS(inverse_dynamics_ff(p, -1.0, 1.0, 0.0, 0.0), InvalidParamsError);
}

TEST_CASE("loop configuration validation") {
  LoopConfig c;
  c.torque_closed = false;
  c.impedance_closed = true;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = {};
  c.filt.Ts = 0.002;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = {};
  c.vc.mode = VcMode::Full;
  CHECK_THROWS_AS(assemble_closed_loop(PlantParams{}, c), ConfigError);
}

TEST_CASE("all loops open reproduces the sampled plant") {
  LoopConfig c;
  c.vc_closed = c.torque_closed = c.impedance_closed = false;
  const PlantParams p;
  const auto cl = assemble_closed_loop(p, c);
  const auto pd = c2d_zoh(build_plant(p), c.Ts());
  CHECK(cl.input_labels() == loop_io::kInputs);
  CHECK(cl.output_labels() == loop_io::kOutputs);
  const std::pair<const char*, const char*> map[] = {{"Vff", "Vm"}, {"Tdist", "Tdist"}, {"Tfr", "Tfr"}};
  for (const auto& [cin, pin] : map) {
    for (const auto& out : plant_io::kOutputs) {
      ChannelResponse a(cl, cin, out), b(pd, pin, out);
      for (double w : {0.2, 20.0, 700.0, 3000.0}) CHECK(std::abs(a(w) - b(w)) <= 1e-7 * std::abs(b(w)) + 1e-15);
    }
  }
}

TEST_CASE("sampling commutes with output selection") {
  const auto g = build_plant(PlantParams{});
  const std::string in[] = {"Vm"};
  const std::string out[] = {"Tl"};
  const auto a = c2d_zoh(g.select(in, out), 0.001);
  const auto b = c2d_zoh(g, 0.001).select(in, out);
  for (double w : {1.0, 100.0, 3000.0}) {
    const auto ya = a.evaluate(a.domain().point(w))(0, 0), yb = b.evaluate(b.domain().point(w))(0, 0);
    CHECK(std::abs(ya - yb) <= 1e-9 * std::abs(yb));
  }
}

TEST_CASE("nominal closed loops: stable and unstable examples") {
  const PlantParams p;
  CHECK(assemble_closed_loop(p, torque_only()).is_stable());
  CHECK(assemble_closed_loop(p, impedance(200, 10)).is_stable());
  CHECK_FALSE(assemble_closed_loop(p, impedance(20000, 50, 4.0)).is_stable());
}

TEST_CASE("zero impedance gains leave the torque-loop spectrum unchanged") {
  const PlantParams p;
  const auto a = assemble_closed_loop(p, torque_only()).poles();
  const auto b = assemble_closed_loop(p, impedance(0, 0)).poles();
  CHECK(oracle::multiset_distance(a, b) < 1e-9);
}

TEST_CASE("velocity compensation is positive feedback") {
  PlantParams p;
  p.KL2 = 0;
  LoopConfig c;
  c.torque_closed = false;
  auto gain = [&](double alpha) {
    c.vc.alpha = alpha;
    ChannelResponse r(assemble_closed_loop(p, c), "Vff", "dthL1");
    return std::abs(r(0.05));
  };
  CHECK(gain(0.94) > 2.0 * gain(0.0));
  // The compensator enters the voltage equation with a positive sign.
  c.vc.alpha = 0.94;
  c.vc.filtered = false;
  const auto cl = assemble_closed_loop(p, c);
  const auto open = c2d_zoh(build_plant(p), c.Ts());
  const double shift = (cl.A().topLeftCorner(7, 7) - open.A()).col(4).dot(open.B().col(0));
  CHECK(shift > 0);
}

TEST_CASE("torque-loop margins meet the design targets") {
  for (const auto& p : {PlantParams::extended(), PlantParams::retracted()}) {
    const auto m = margins(assemble_loop_gain_ss(p, torque_only(), BreakPoint::TorqueError));
    REQUIRE(m.phase_margin_deg.has_value());
    CHECK(*m.phase_margin_deg > 30.0);
    CHECK(m.gain_margin_db > 12.0);
  }
  const auto m = margins(assemble_loop_gain_ss(PlantParams{}, torque_only(), BreakPoint::TorqueError));
  CHECK(*m.phase_margin_deg == doctest::Approx(55.6).epsilon(0.01));
  CHECK(m.gain_margin_db == doctest::Approx(40.1).epsilon(0.01));
}

TEST_CASE("impedance-break loop gain at the nominal gains") {
  const PlantParams p;
  const auto L = assemble_loop_gain_ss(p, impedance(200, 10), BreakPoint::ImpedanceError);
  const auto m = margins(L);
  REQUIRE(m.phase_margin_deg.has_value());
  CHECK(*m.phase_margin_deg == doctest::Approx(30.7949).epsilon(1e-4));
  CHECK(m.gain_margin_db == doctest::Approx(29.3471).epsilon(1e-4));
  // 1 + L closes the loop: its zeros are the closed-loop poles.
  const auto tf = assemble_loop_gain(p, impedance(200, 10), BreakPoint::ImpedanceError);
  const auto cl = (tf.numerator() + tf.denominator()).roots();
  for (const auto& z : cl) CHECK(std::abs(z) < 1.0);
}
