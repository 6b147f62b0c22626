#include "zwidth/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "zwidth/analysis/passivity.hpp"
#include "zwidth/analysis/performance.hpp"
#include "zwidth/error.hpp"
#include "zwidth/lti/frequency.hpp"
#include "zwidth/lti/margins.hpp"

namespace zwidth::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr std::pair<Command, const char*> kCommandNames[] = {
    {Command::Region, "region"}, {Command::Passivity, "passivity"}, {Command::Margins, "margins"},
    {Command::Bandwidth, "bandwidth"}, {Command::Step, "step"}, {Command::Chirp, "chirp"},
    {Command::Table2, "table2"}};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json loop_summary(const PlantParams& p, const LoopConfig& l) {
  json j;
  j["leg_JL2"] = json_num(p.JL2);
  j["leg_KL2"] = json_num(p.KL2);
  j["beta"] = json_num(l.pi.beta);
  j["alpha"] = json_num(l.vc.alpha);
  j["Ts"] = json_num(l.Ts());
  j["Nav"] = l.filt.Nav;
  j["torque_closed"] = l.torque_closed;
  j["vc_closed"] = l.vc_closed;
  j["impedance_closed"] = l.impedance_closed;
  j["Pgain"] = json_num(l.imp.Pgain);
  j["Dgain"] = json_num(l.imp.Dgain);
  return j;
}

json opt_num(const std::optional<double>& v) { return v ? json_num(*v) : json(nullptr); }

void cmd_region(const RunConfig& cfg, const std::vector<Variant>& vars, int jobs, CommandOutput& out) {
  RegionOptions opt;
  opt.low_pm_deg = cfg.sweep.low_pm_deg;
  opt.break_point = cfg.sweep.break_point;
  opt.jobs = jobs;
  const auto P = cfg.sweep.p_axis.values();
  const auto D = cfg.sweep.d_axis.values();
  for (const auto& v : vars) {
    const RegionGrid g = stability_region(v.plant, v.loop, P, D, opt);
    out.files["region_" + v.tag + ".csv"] = region_csv(g);
    int counts[3] = {0, 0, 0};
    for (auto c : g.cells) ++counts[static_cast<int>(c)];
    int notes = 0;
    for (const auto& n : g.notes) notes += !n.empty();
    out.report += fmt::format("{}: {}x{} cells, unstable {}, low PM {}, stable {}{}\n", v.tag, P.size(), D.size(),
                              counts[0], counts[1], counts[2],
                              notes ? fmt::format(" ({} cells with assembly errors)", notes) : "");
  }
}

void cmd_passivity(const std::vector<Variant>& vars, CommandOutput& out) {
  const PassivityOptions opt;
  for (const auto& v : vars) {
    const PortAdmittance adm = driving_port_admittance(v.plant, v.loop);
    const PassivityReport r = passivity_check(adm.ss);
    json j;
    j["tag"] = v.tag;
    j["port"] = "Tdist->dthL2";
    j.update(loop_summary(v.plant, v.loop));
    j["closed_loop_stable"] = adm.closed_loop_stable;
    j["poles_stable"] = r.poles_stable;
    j["max_abs_corrected_phase_deg"] = json_num(r.max_abs_corrected_phase_deg);
    j["first_violation_rad_s"] = opt_num(r.first_violation_rad_s);
    j["passive"] = r.passive && adm.closed_loop_stable;
    j["corrected"] = r.corrected;
    out.files["passivity_" + v.tag + ".json"] = dump(j);

    const double Ts = v.loop.Ts();
    const auto w = log_grid(opt.lo_rad_s, opt.hi_fraction * std::numbers::pi / Ts, opt.grid_points);
    const auto corr = corrected_phase_deg(adm.ss, w, true);
    const auto Y = freq_response(adm.ss, w);
    std::vector<std::vector<double>> rows(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      const double hold = w[k] * Ts / 2 * 180.0 / std::numbers::pi;
      rows[k] = {w[k], -20.0 * std::log10(std::abs(Y[k])), corr[k] + hold, corr[k]};
    }
    out.files["bode_" + v.tag + ".csv"] = csv({"w_rad_s", "mag_db", "phase_deg", "corrected_phase_deg"}, rows);

    out.report += fmt::format("{}: {} (max |corrected phase| {:.4f} deg", v.tag,
                              !adm.closed_loop_stable ? "unstable" : (r.passive ? "passive" : "not passive"),
                              r.max_abs_corrected_phase_deg);
    if (r.first_violation_rad_s) out.report += fmt::format(", first violation {:.3f} rad/s", *r.first_violation_rad_s);
    out.report += ")\n";
  }
}

void cmd_margins(const RunConfig& cfg, const std::vector<Variant>& vars, CommandOutput& out) {
  for (const auto& v : vars) {
    const StateSpace L = assemble_loop_gain_ss(v.plant, v.loop, cfg.sweep.break_point);
    const MarginReport m = margins(L);
    json j;
    j["tag"] = v.tag;
    j["break"] = to_string(cfg.sweep.break_point);
    j.update(loop_summary(v.plant, v.loop));
    j["gain_margin_db"] = json_num(m.gain_margin_db);
    j["phase_margin_deg"] = opt_num(m.phase_margin_deg);
    j["gain_crossover_hz"] = opt_num(m.gain_crossover_hz);
    j["phase_crossover_hz"] = opt_num(m.phase_crossover_hz);
    out.files["margins_" + v.tag + ".json"] = dump(j);
    out.report += fmt::format("{}: GM {} dB, PM {} deg\n", v.tag, fmt_num(m.gain_margin_db),
                              m.phase_margin_deg ? fmt_num(*m.phase_margin_deg) : "none");
  }
}

void cmd_bandwidth(const std::vector<Variant>& vars, CommandOutput& out) {
  for (const auto& v : vars) {
    const Bandwidth b = torque_bandwidth(v.plant, v.loop);
    json j;
    j["tag"] = v.tag;
    j.update(loop_summary(v.plant, v.loop));
    j["KL2_evaluated"] = 0.0;
    j["bandwidth_rad_s"] = json_num(b.rad_s);
    j["nyquist_limited"] = b.nyquist_limited;
    out.files["bandwidth_" + v.tag + ".json"] = dump(j);
    out.report += fmt::format("{}: torque bandwidth {:.4g} rad/s{}\n", v.tag, b.rad_s,
                              b.nyquist_limited ? " (Nyquist limited)" : "");
  }
}

void cmd_step(const RunConfig& cfg, const std::vector<Variant>& vars, CommandOutput& out) {
  std::vector<std::pair<std::string, std::optional<double>>> settling;
  for (const auto& v : vars) {
    const StateSpace sys = assemble_closed_loop(v.plant, v.loop);
    SimConfig sc;
    sc.duration = cfg.sim.duration;
    sc.Ts = v.loop.Ts();
    sc.inputs["Tff"] = Signal::step(cfg.sim.step_amplitude);
    sc.quantize_encoder = cfg.sim.quantize;
    sc.counts_per_rev = v.loop.filt.counts_per_rev;
    if (cfg.sim.ripple_amplitude != 0.0) sc.ripple = RippleSpec{cfg.sim.ripple_amplitude};
    const SimTrace tr = run_sim(sys, sc);
    out.files["trace_" + v.tag + ".csv"] = trace_csv(tr);

    json j;
    j["tag"] = v.tag;
    j.update(loop_summary(v.plant, v.loop));
    j["channel"] = "Tl";
    j["closed_loop_stable"] = sys.is_stable();
    std::optional<double> ts;
    std::string note;
    if (sys.is_stable()) {
      const double final_value = cfg.sim.step_amplitude * sys.channel("Tff", "Tl").evaluate(1.0)(0, 0).real();
      j["final_value"] = json_num(final_value);
      try {
        const StepMetrics m = step_metrics(tr, "Tl", final_value);
        j["rise_time_10_90_s"] = json_num(m.rise_time_10_90);
        j["overshoot_pct"] = json_num(m.overshoot_pct);
        j["settling_time_2pct_s"] = json_num(m.settling_time_2pct);
        ts = m.settling_time_2pct;
      } catch (const Error& e) {
        note = e.what();
      }
    } else {
      note = "closed loop unstable";
    }
    if (!note.empty()) j["note"] = note;
    out.files["step_" + v.tag + ".json"] = dump(j);
    settling.emplace_back(v.tag, ts);
    out.report += fmt::format("{}: 2% settling {}\n", v.tag, ts ? fmt::format("{:.3f} s", *ts) : "n/a (" + note + ")");
  }
  if (settling.size() > 1) {
    std::string line = "settling comparison:";
    for (const auto& [tag, ts] : settling) line += fmt::format(" {}={}", tag, ts ? fmt::format("{:.3f}s", *ts) : "n/a");
    out.report += line + "\n";
  }
}

void cmd_chirp(const RunConfig& cfg, const std::vector<Variant>& vars, CommandOutput& out) {
  for (const auto& v : vars) {
    const StateSpace sys = assemble_closed_loop(v.plant, v.loop);
    if (!sys.is_stable()) throw NumericalError(v.tag + ": closed loop unstable, chirp response undefined");
    ChirpSpec spec;
    spec.input = "Vff";
    spec.output = "dthL1";
    spec.amplitude = cfg.sim.chirp_amplitude;
    spec.f0_hz = cfg.sim.chirp_f0;
    spec.f1_hz = cfg.sim.chirp_f1;
    spec.duration = cfg.sim.chirp_duration;
    const ChirpEstimate est = chirp_response(sys, spec);
    const ChannelResponse H(sys, spec.input, spec.output);
    std::vector<std::vector<double>> rows;
    double worst = 0.0;
    int close = 0;
    for (std::size_t k = 0; k < est.freq_hz.size(); ++k) {
      const double model = std::abs(H(2 * std::numbers::pi * est.freq_hz[k]));
      rows.push_back({est.freq_hz[k], est.gain[k], model});
      const double dev = std::abs(est.gain[k] - model) / model;
      worst = std::max(worst, dev);
      close += dev <= 0.1;
    }
    out.files["chirp_" + v.tag + ".csv"] = csv({"freq_hz", "gain", "model_gain"}, rows);
    out.report += fmt::format("{}: {} windows, {} within 10% of the model gain, worst deviation {:.3g}\n", v.tag,
                              rows.size(), close, worst);
  }
}

void cmd_table2(const RunConfig& cfg, CommandOutput& out) {
  const auto res = table2(cfg.plant, cfg.loop);
  std::string body = "row,torque_loop,imp_200_10,imp_20000_50,ref_torque_loop,ref_imp_200_10,ref_imp_20000_50,match\n";
  std::string table = fmt::format("{:<12} {:<26} {:<26} {}\n", "row", "torque loop", "P=200 D=10", "P=20000 D=50");
  int matches = 0;
  for (const auto& r : res) {
    body += r.name;
    for (auto v : r.got) body += std::string(",") + to_string(v);
    for (auto v : r.reference) body += std::string(",") + to_string(v);
    body += r.matches() ? ",1\n" : ",0\n";
    table += fmt::format("{:<12}", r.name);
    for (int c = 0; c < 3; ++c) {
      const auto u = static_cast<std::size_t>(c);
      table += fmt::format(" {:<26}", fmt::format("{} (ref {}){}", to_string(r.got[u]), to_string(r.reference[u]),
                                                   r.got[u] == r.reference[u] ? "" : " *"));
    }
    while (table.back() == ' ') table.pop_back();
    table += "\n";
    matches += r.matches();
  }
  out.files["table2.csv"] = body;
  out.report += table + fmt::format("{}/{} rows match the reference verdicts\n", matches, res.size());
}

}  // namespace

Command parse_command(const std::string& name) {
  for (const auto& [c, n] : kCommandNames)
    if (name == n) return c;
  throw ConfigError("unknown command '" + name + "'");
}

const char* to_string(Command c) noexcept {
  for (const auto& [k, n] : kCommandNames)
    if (k == c) return n;
  return "?";
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unstable: return "Unstable";
  }
  return "?";
}

Verdict port_verdict(const PlantParams& p, const LoopConfig& loop) {
  const PortAdmittance adm = driving_port_admittance(p, loop);
  if (!adm.closed_loop_stable) return Verdict::Unstable;
  return passivity_check(adm.ss).passive ? Verdict::Yes : Verdict::No;
}

const std::vector<Table2Row>& table2_rows() {
  using V = Verdict;
  constexpr V Y = V::Yes, N = V::No, U = V::Unstable;
  static const std::vector<Table2Row> rows = [] {
    std::vector<Table2Row> r;
    auto beta = [](double b) { return [b](PlantParams&, LoopConfig& l) { l.pi.beta = b; }; };
    auto alpha = [](double a) { return [a](PlantParams&, LoopConfig& l) { l.vc.alpha = a; }; };
    auto ts = [](double t) { return [t](PlantParams&, LoopConfig& l) { l.set_Ts(t); }; };
    auto nav = [](int n) { return [n](PlantParams&, LoopConfig& l) { l.filt.Nav = n; }; };
    r.push_back({"beta=1", beta(1.0), {N, Y, Y}});
    r.push_back({"beta=0.5", beta(0.5), {N, Y, N}});
    r.push_back({"beta=2", beta(2.0), {N, Y, N}});
    r.push_back({"beta=4", beta(4.0), {N, Y, U}});
    r.push_back({"beta=6", beta(6.0), {N, Y, U}});
    r.push_back({"alpha=0", alpha(0.0), {Y, Y, Y}});
    r.push_back({"alpha=0.5", alpha(0.5), {Y, Y, Y}});
    r.push_back({"Ts=4ms", ts(4e-3), {N, Y, N}});
    r.push_back({"Ts=2ms", ts(2e-3), {N, Y, N}});
    r.push_back({"Ts=0.5ms", ts(0.5e-3), {N, Y, Y}});
    r.push_back({"Nav=1", nav(1), {N, Y, Y}});
    r.push_back({"Nav=10", nav(10), {N, Y, Y}});
    r.push_back({"Nav=20", nav(20), {N, Y, Y}});
    r.push_back({"Nav=50", nav(50), {N, Y, Y}});
    r.push_back({"retracted", [](PlantParams& p, LoopConfig&) {
                   p.JL2 = PlantParams::retracted().JL2;
                   p.KL2 = PlantParams::retracted().KL2;
                 }, {N, Y, Y}});
    return r;
  }();
  return rows;
}

std::vector<Table2Result> table2(const PlantParams& nominal_plant, const LoopConfig& nominal_loop) {
  std::vector<Table2Result> out;
  for (const auto& row : table2_rows()) {
    PlantParams p = nominal_plant;
    LoopConfig l = nominal_loop;
    l.torque_closed = true;
    l.vc_closed = true;
    row.apply(p, l);
    Table2Result r{row.name, {}, row.reference};
    l.impedance_closed = false;
    r.got[0] = port_verdict(p, l);
    l.impedance_closed = true;
    l.imp = {200.0, 10.0};
    r.got[1] = port_verdict(p, l);
    l.imp = {20000.0, 50.0};
    r.got[2] = port_verdict(p, l);
    out.push_back(std::move(r));
  }
  return out;
}

CommandOutput run_command(const RunConfig& cfg, Command cmd, int jobs) {
  CommandOutput out;
  if (cmd == Command::Table2) {
    cmd_table2(cfg, out);
    return out;
  }
  const auto vars = expand_variants(cfg);
  switch (cmd) {
    case Command::Region: cmd_region(cfg, vars, jobs, out); break;
    case Command::Passivity: cmd_passivity(vars, out); break;
    case Command::Margins: cmd_margins(cfg, vars, out); break;
    case Command::Bandwidth: cmd_bandwidth(vars, out); break;
    case Command::Step: cmd_step(cfg, vars, out); break;
    case Command::Chirp: cmd_chirp(cfg, vars, out); break;
    case Command::Table2: break;
  }
  return out;
}

int execute(const RunManifest& m, std::ostream& out, std::ostream& err) {
  try {
    if (m.jobs < 1) throw ConfigError("--jobs must be at least 1");
    std::string text;
    if (!m.config_path.empty()) {
      std::ifstream f(m.config_path, std::ios::binary);
      if (!f) throw ConfigError("cannot read config file " + m.config_path);
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    const RunConfig cfg = parse_config(text, m.overrides, m.config_path.empty() ? "config" : m.config_path);
    const CommandOutput res = run_command(cfg, m.command, m.jobs);
    write_files(m.output_dir, res.files, m.force);
    out << res.report;
    return 0;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace zwidth::cli
