#include "zwidth/control/assembly.hpp"

#include <optional>

#include "zwidth/control/blocks.hpp"
#include "zwidth/error.hpp"
#include "zwidth/lti/discretize.hpp"
#include "zwidth/lti/interconnect.hpp"
#include "zwidth/lti/minreal.hpp"

namespace zwidth {

namespace {

StateSpace gain_row(std::vector<double> k, std::vector<std::string> in, const std::string& out, TimeDomain d) {
  Matrix D(1, static_cast<Eigen::Index>(k.size()));
  for (std::size_t i = 0; i < k.size(); ++i) D(0, static_cast<Eigen::Index>(i)) = k[i];
  return StateSpace::static_gain(std::move(D), d, std::move(in), {out});
}

struct Diagram {
  std::vector<StateSpace> blocks;
  std::vector<Wire> wires;
};

Diagram build_diagram(const PlantParams& p, const LoopConfig& loop, std::optional<BreakPoint> broken) {
  loop.validate();
  const double Ts = loop.Ts();
  const auto dom = TimeDomain::discrete(Ts);
  const bool torque = loop.torque_closed || broken == BreakPoint::TorqueError;
  const bool impedance = loop.impedance_closed || broken == BreakPoint::ImpedanceError;

  Diagram g;
  auto& b = g.blocks;
  b.push_back(c2d_zoh(build_plant(p), Ts));
  b.push_back(gain_row({1, 1}, {"meas.th", "enc_err"}, "thL1_meas", dom));
  b.push_back(averaging_filter_ss(loop.filt, "filt.in", "vel_filt"));
  b.push_back(gain_row({1, -1}, {"theta_ref", "ierr.meas"}, "ierr.out", dom));
  b.push_back(gain_row({loop.imp.Pgain, -loop.imp.Dgain}, {"imp.err", "imp.vel"}, "imp.out", dom));
  b.push_back(gain_row({1, 1, -1}, {"terr.ref", "Tff", "terr.meas"}, "terr.out", dom));
  b.push_back(pi_ss(loop.pi, "pi.in", "pi.out"));
  b.push_back(gain_row({vc_simplified_gain(p, loop.vc.alpha)}, {"vc.in"}, "vc.out", dom));
  b.push_back(gain_row({1, 1, 1}, {"vsum.pi", "vsum.vc", "Vff"}, "Vm_cmd", dom));
  if (loop.compute_delay) {
    b.emplace_back(Matrix::Zero(1, 1), Matrix::Ones(1, 1), Matrix::Ones(1, 1), Matrix::Zero(1, 1), dom,
                   std::vector<std::string>{"hold.in"}, std::vector<std::string>{"Vm"});
  } else {
    b.push_back(gain_row({1}, {"hold.in"}, "Vm", dom));
  }

  auto& w = g.wires;
  w.push_back({"thL1", "meas.th"});
  w.push_back({"thL1_meas", "filt.in"});
  w.push_back({"Vm_cmd", "hold.in"});
  w.push_back({"Vm", "Vm"});
  if (torque) {
    w.push_back({"Tl", "terr.meas"});
    if (broken != BreakPoint::TorqueError) w.push_back({"terr.out", "pi.in"});
    w.push_back({"pi.out", "vsum.pi"});
  }
  if (loop.vc_closed) {
    w.push_back({loop.vc.filtered ? "vel_filt" : "dthL1", "vc.in"});
    w.push_back({"vc.out", "vsum.vc"});
  }
  if (impedance) {
    w.push_back({"thL1_meas", "ierr.meas"});
    w.push_back({"ierr.out", "imp.err"});
    w.push_back({"vel_filt", "imp.vel"});
    if (broken != BreakPoint::ImpedanceError) w.push_back({"imp.out", "terr.ref"});
  }
  return g;
}

}  // namespace

StateSpace assemble_closed_loop(const PlantParams& p, const LoopConfig& loop) {
  const Diagram g = build_diagram(p, loop, std::nullopt);
  return connect(g.blocks, g.wires, loop_io::kInputs, loop_io::kOutputs);
}

StateSpace assemble_loop_gain_ss(const PlantParams& p, const LoopConfig& loop, BreakPoint at) {
  const Diagram g = build_diagram(p, loop, at);
  const std::string in = at == BreakPoint::TorqueError ? "pi.in" : "terr.ref";
  const std::string out = at == BreakPoint::TorqueError ? "terr.out" : "imp.out";
  const std::string ins[] = {in};
  const std::string outs[] = {out};
  const StateSpace h = connect(g.blocks, g.wires, ins, outs);
  return StateSpace(h.A(), h.B(), -h.C(), -h.D(), h.domain(), {"inject"}, {"return"});
}

RationalTF assemble_loop_gain(const PlantParams& p, const LoopConfig& loop, BreakPoint at) {
  return ss_to_tf(minreal(assemble_loop_gain_ss(p, loop, at)));
}

const char* to_string(BreakPoint b) noexcept {
  return b == BreakPoint::TorqueError ? "torque" : "impedance";
}

}  // namespace zwidth
