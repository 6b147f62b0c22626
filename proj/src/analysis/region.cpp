#include "zwidth/analysis/region.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "zwidth/error.hpp"
#include "zwidth/lti/frequency.hpp"
#include "zwidth/lti/margins.hpp"

namespace zwidth {

std::vector<double> AxisSpec::values() const {
  if (count < 1) throw InvalidArgument("axis: count must be >= 1");
  if (!(lo > 0) || !(hi >= lo)) throw InvalidArgument("axis: need 0 < lo <= hi");
  if (count == 1) return {lo};
  if (log_spaced) return log_grid(lo, hi, count);
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  v.back() = hi;
  return v;
}

std::pair<std::size_t, std::size_t> RegionGrid::nearest(double P, double D) const {
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 1; i < p_axis.size(); ++i)
    if (std::abs(std::log(p_axis[i] / P)) < std::abs(std::log(p_axis[bi] / P))) bi = i;
  for (std::size_t j = 1; j < d_axis.size(); ++j)
    if (std::abs(d_axis[j] - D) < std::abs(d_axis[bj] - D)) bj = j;
  return {bi, bj};
}

namespace {

CellClass classify(const PlantParams& p, LoopConfig loop, double P, double D, const RegionOptions& opt,
                   std::string& note) {
  loop.imp = {P, D};
  loop.impedance_closed = true;
  try {
    if (!assemble_closed_loop(p, loop).is_stable(opt.stability_tol)) return CellClass::Unstable;
    if (!opt.classify_margin) return CellClass::Stable;
    const auto m = margins(assemble_loop_gain_ss(p, loop, opt.break_point));
    if (m.phase_margin_deg && *m.phase_margin_deg < opt.low_pm_deg) return CellClass::StableLowPM;
    return CellClass::Stable;
  } catch (const Error& e) {
    note = e.what();
    return CellClass::Unstable;
  }
}

}  // namespace

RegionGrid stability_region(const PlantParams& p, const LoopConfig& base, const std::vector<double>& p_axis,
                            const std::vector<double>& d_axis, const RegionOptions& opt) {
  p.validate();
  LoopConfig meta = base;
  meta.impedance_closed = true;
  meta.validate();
  for (double v : p_axis)
    if (!(v >= 0)) throw InvalidArgument("stability_region: Pgain values must be >= 0");
  for (double v : d_axis)
    if (!(v >= 0)) throw InvalidArgument("stability_region: Dgain values must be >= 0");

  RegionGrid g{p_axis, d_axis, {}, {}, meta};
  const std::size_t nd = d_axis.size(), total = p_axis.size() * nd;
  g.cells.assign(total, CellClass::Unstable);
  g.notes.assign(total, {});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < total;)
      g.cells[k] = classify(p, meta, p_axis[k / nd], d_axis[k % nd], opt, g.notes[k]);
  };
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(total)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return g;
}

int count_unstable(const RegionGrid& g, const Quadrant& q) {
  int n = 0;
  for (std::size_t i = 0; i < g.p_axis.size(); ++i)
    for (std::size_t j = 0; j < g.d_axis.size(); ++j)
      if (g.at(i, j) == CellClass::Unstable && q(g.p_axis[i], g.d_axis[j])) ++n;
  return n;
}

int region_comparisons(const RegionGrid& a, const RegionGrid& b, const Quadrant& q) {
  if (a.p_axis != b.p_axis || a.d_axis != b.d_axis) throw AxisMismatchError("region_comparisons: axes differ");
  return count_unstable(b, q) - count_unstable(a, q);
}

}  // namespace zwidth
