#include "zwidth/cli/config.hpp"

#include <charconv>
#include <functional>
#include <map>

#include <fmt/format.h>

#include "zwidth/error.hpp"

namespace zwidth::cli {

namespace {

struct Entry {
  std::string value;
  std::string origin;
  int line;
  int column;
};

[[noreturn]] void fail(const Entry& e, const std::string& what) { throw ParseError(e.origin, e.line, e.column, what); }

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto c = s.find(',');
    out.push_back(trim(s.substr(0, c)));
    if (c == std::string_view::npos) break;
    s.remove_prefix(c + 1);
  }
  return out;
}

double to_double(const Entry& e, std::string_view s) {
  double v = 0;
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (s.empty() || r.ec != std::errc{} || r.ptr != end) fail(e, fmt::format("expected a number, got '{}'", s));
  return v;
}

int to_int(const Entry& e, std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (s.empty() || r.ec != std::errc{} || r.ptr != end) fail(e, fmt::format("expected an integer, got '{}'", s));
  return v;
}

double num(const Entry& e) { return to_double(e, e.value); }
int integer(const Entry& e) { return to_int(e, e.value); }

bool boolean(const Entry& e) {
  if (e.value == "true" || e.value == "yes" || e.value == "1") return true;
  if (e.value == "false" || e.value == "no" || e.value == "0") return false;
  fail(e, fmt::format("expected true or false, got '{}'", e.value));
}

std::vector<double> num_list(const Entry& e) {
  std::vector<double> out;
  for (auto s : split_list(e.value)) out.push_back(to_double(e, s));
  return out;
}

std::vector<int> int_list(const Entry& e) {
  std::vector<int> out;
  for (auto s : split_list(e.value)) out.push_back(to_int(e, s));
  return out;
}

using Setter = std::function<void(RunConfig&, const Entry&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    // plant.preset is applied before the individual plant fields.
    t["plant.preset"] = [](RunConfig&, const Entry&) {};
    for (const auto& name : PlantParams::field_names())
      t["plant." + name] = [name](RunConfig& c, const Entry& e) { c.plant.field(name) = num(e); };

    t["torque.beta"] = [](RunConfig& c, const Entry& e) { c.loop.pi.beta = num(e); };
    t["torque.Ts"] = [](RunConfig& c, const Entry& e) { c.loop.set_Ts(num(e)); };
    t["torque.closed"] = [](RunConfig& c, const Entry& e) { c.loop.torque_closed = boolean(e); };
    t["torque.compute_delay"] = [](RunConfig& c, const Entry& e) { c.loop.compute_delay = boolean(e); };

    t["velocity_comp.alpha"] = [](RunConfig& c, const Entry& e) { c.loop.vc.alpha = num(e); };
    t["velocity_comp.mode"] = [](RunConfig& c, const Entry& e) {
      if (e.value == "simplified")
        c.loop.vc.mode = VcMode::Simplified;
      else if (e.value == "full")
        c.loop.vc.mode = VcMode::Full;
      else
        fail(e, "mode must be 'simplified' or 'full'");
    };
    t["velocity_comp.filtered"] = [](RunConfig& c, const Entry& e) { c.loop.vc.filtered = boolean(e); };
    t["velocity_comp.closed"] = [](RunConfig& c, const Entry& e) { c.loop.vc_closed = boolean(e); };

    t["impedance.Pgain"] = [](RunConfig& c, const Entry& e) { c.loop.imp.Pgain = num(e); };
    t["impedance.Dgain"] = [](RunConfig& c, const Entry& e) { c.loop.imp.Dgain = num(e); };
    t["impedance.closed"] = [](RunConfig& c, const Entry& e) { c.loop.impedance_closed = boolean(e); };

    t["filter.Nav"] = [](RunConfig& c, const Entry& e) { c.loop.filt.Nav = integer(e); };
    t["filter.counts_per_rev"] = [](RunConfig& c, const Entry& e) { c.loop.filt.counts_per_rev = integer(e); };

    t["sweep.beta"] = [](RunConfig& c, const Entry& e) { c.sweep.beta = num_list(e); };
    t["sweep.alpha"] = [](RunConfig& c, const Entry& e) { c.sweep.alpha = num_list(e); };
    t["sweep.Ts"] = [](RunConfig& c, const Entry& e) { c.sweep.Ts = num_list(e); };
    t["sweep.Nav"] = [](RunConfig& c, const Entry& e) { c.sweep.Nav = int_list(e); };
    t["sweep.p_min"] = [](RunConfig& c, const Entry& e) { c.sweep.p_axis.lo = num(e); };
    t["sweep.p_max"] = [](RunConfig& c, const Entry& e) { c.sweep.p_axis.hi = num(e); };
    t["sweep.p_count"] = [](RunConfig& c, const Entry& e) { c.sweep.p_axis.count = integer(e); };
    t["sweep.d_min"] = [](RunConfig& c, const Entry& e) { c.sweep.d_axis.lo = num(e); };
    t["sweep.d_max"] = [](RunConfig& c, const Entry& e) { c.sweep.d_axis.hi = num(e); };
    t["sweep.d_count"] = [](RunConfig& c, const Entry& e) { c.sweep.d_axis.count = integer(e); };
    t["sweep.break"] = [](RunConfig& c, const Entry& e) {
      if (e.value == "impedance")
        c.sweep.break_point = BreakPoint::ImpedanceError;
      else if (e.value == "torque")
        c.sweep.break_point = BreakPoint::TorqueError;
      else
        fail(e, "break must be 'impedance' or 'torque'");
    };
    t["sweep.low_pm_deg"] = [](RunConfig& c, const Entry& e) { c.sweep.low_pm_deg = num(e); };
    t["sweep.k_min"] = [](RunConfig& c, const Entry& e) { c.sweep.k_min = num(e); };
    t["sweep.k_max"] = [](RunConfig& c, const Entry& e) { c.sweep.k_max = num(e); };
    t["sweep.k_points"] = [](RunConfig& c, const Entry& e) { c.sweep.k_points = integer(e); };

    t["sim.duration"] = [](RunConfig& c, const Entry& e) { c.sim.duration = num(e); };
    t["sim.step_amplitude"] = [](RunConfig& c, const Entry& e) { c.sim.step_amplitude = num(e); };
    t["sim.quantize"] = [](RunConfig& c, const Entry& e) { c.sim.quantize = boolean(e); };
    t["sim.ripple_amplitude"] = [](RunConfig& c, const Entry& e) { c.sim.ripple_amplitude = num(e); };
    t["sim.chirp_f0"] = [](RunConfig& c, const Entry& e) { c.sim.chirp_f0 = num(e); };
    t["sim.chirp_f1"] = [](RunConfig& c, const Entry& e) { c.sim.chirp_f1 = num(e); };
    t["sim.chirp_duration"] = [](RunConfig& c, const Entry& e) { c.sim.chirp_duration = num(e); };
    t["sim.chirp_amplitude"] = [](RunConfig& c, const Entry& e) { c.sim.chirp_amplitude = num(e); };
    return t;
  }();
  return table;
}

bool known_section(std::string_view s) {
  return s == "plant" || s == "torque" || s == "velocity_comp" || s == "impedance" || s == "filter" ||
         s == "sweep" || s == "sim";
}

void put(std::map<std::string, Entry>& entries, const std::string& key, Entry e, bool allow_replace, int key_col) {
  if (!setters().count(key)) throw ParseError(e.origin, e.line, key_col, fmt::format("unknown key '{}'", key));
  if (!allow_replace && entries.count(key))
    throw ParseError(e.origin, e.line, key_col,
                     fmt::format("duplicate key '{}' (first set on line {})", key, entries.at(key).line));
  entries[key] = std::move(e);
}

void read_text(std::string_view text, const std::string& origin, std::map<std::string, Entry>& entries) {
  std::string section;
  int line_no = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    // Comments start with # or ; anywhere on the line.
    const auto hash = raw.find_first_of("#;");
    const std::string_view body = raw.substr(0, hash);
    const std::string_view line = trim(body);
    if (line.empty()) continue;
    const int indent = static_cast<int>(body.find_first_not_of(" \t")) + 1;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError(origin, line_no, indent + static_cast<int>(line.size()), "expected ']'");
      const std::string_view name = trim(line.substr(1, line.size() - 2));
      if (!known_section(name))
        throw ParseError(origin, line_no, indent + 1, fmt::format("unknown section '{}'", name));
      section = name;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(origin, line_no, indent, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(origin, line_no, indent, "missing key before '='");
    if (section.empty()) throw ParseError(origin, line_no, indent, "key outside of any section");
    const int value_col = static_cast<int>(body.find_first_not_of(" \t", body.find('=') + 1)) + 1;
    put(entries, section + "." + std::string(key), Entry{std::string(value), origin, line_no, value_col}, false,
        indent);
  }
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides, const std::string& origin) {
  std::map<std::string, Entry> entries;
  read_text(text, origin, entries);
  for (std::size_t i = 0; i < overrides.size(); ++i) {
    const std::string& o = overrides[i];
    const std::string where = fmt::format("--set #{}", i + 1);
    const auto eq = o.find('=');
    const auto dot = o.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq)
      throw ParseError(where, 0, 0, fmt::format("expected section.key=value, got '{}'", o));
    const std::string key{trim(std::string_view(o).substr(0, eq))};
    const std::string value{trim(std::string_view(o).substr(eq + 1))};
    put(entries, key, Entry{value, where, 0, static_cast<int>(eq) + 2}, true, 1);
  }

  RunConfig cfg;
  if (const auto it = entries.find("plant.preset"); it != entries.end()) {
    if (it->second.value == "extended")
      cfg.plant = PlantParams::extended();
    else if (it->second.value == "retracted")
      cfg.plant = PlantParams::retracted();
    else
      fail(it->second, "preset must be 'extended' or 'retracted'");
  }
  for (const auto& [key, e] : entries) setters().at(key)(cfg, e);

  cfg.plant.validate();
  cfg.loop.validate();
  for (double b : cfg.sweep.beta)
    if (!(b > 0)) throw InvalidParamsError("sweep.beta", "values must be > 0");
  for (double a : cfg.sweep.alpha)
    if (!(a >= 0)) throw InvalidParamsError("sweep.alpha", "values must be >= 0");
  for (double t : cfg.sweep.Ts)
    if (!(t > 0)) throw InvalidParamsError("sweep.Ts", "values must be > 0");
  for (int n : cfg.sweep.Nav)
    if (n < 1) throw InvalidParamsError("sweep.Nav", "values must be >= 1");
  for (const auto* ax : {&cfg.sweep.p_axis, &cfg.sweep.d_axis}) {
    const char* name = ax == &cfg.sweep.p_axis ? "sweep.p" : "sweep.d";
    if (!(ax->lo > 0) || !(ax->hi >= ax->lo)) throw InvalidParamsError(name, "axis needs 0 < min <= max");
    if (ax->count < 1) throw InvalidParamsError(name, "axis count must be >= 1");
  }
  if (!(cfg.sweep.k_min > 0) || !(cfg.sweep.k_max > cfg.sweep.k_min))
    throw InvalidParamsError("sweep.k_min", "need 0 < k_min < k_max");
  if (cfg.sweep.k_points < 2) throw InvalidParamsError("sweep.k_points", "must be >= 2");
  if (!(cfg.sim.duration > 0)) throw InvalidParamsError("sim.duration", "must be > 0");
  if (!(cfg.sim.ripple_amplitude >= 0)) throw InvalidParamsError("sim.ripple_amplitude", "must be >= 0");
  return cfg;
}

std::vector<Variant> expand_variants(const RunConfig& cfg) {
  std::vector<Variant> out{{"", cfg.plant, cfg.loop}};
  auto expand = [&out](const auto& values, const char* name, auto apply) {
    if (values.empty()) return;
    std::vector<Variant> next;
    for (const auto& v : out) {
      for (const auto& x : values) {
        Variant w = v;
        apply(w.loop, x);
        w.tag += fmt::format("{}{}{:g}", w.tag.empty() ? "" : "_", name, static_cast<double>(x));
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  };
  expand(cfg.sweep.beta, "beta", [](LoopConfig& l, double x) { l.pi.beta = x; });
  expand(cfg.sweep.alpha, "alpha", [](LoopConfig& l, double x) { l.vc.alpha = x; });
  expand(cfg.sweep.Ts, "Ts", [](LoopConfig& l, double x) { l.set_Ts(x); });
  expand(cfg.sweep.Nav, "Nav", [](LoopConfig& l, int x) { l.filt.Nav = x; });
  for (auto& v : out)
    if (v.tag.empty()) v.tag = "nominal";
  return out;
}

}  // namespace zwidth::cli
