#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zwidth/control/assembly.hpp"
#include "zwidth/control/config.hpp"
#include "zwidth/plant/plant.hpp"

namespace zwidth {

enum class CellClass : int { Unstable = 0, StableLowPM = 1, Stable = 2 };

struct RegionGrid {
  std::vector<double> p_axis;
  std::vector<double> d_axis;
  /// Row-major, p_axis.size() rows by d_axis.size() columns.
  std::vector<CellClass> cells;
  /// Diagnostic per cell, empty unless classification hit an error.
  std::vector<std::string> notes;
  /// The swept configuration; its Pgain and Dgain are meaningless.
  LoopConfig sweep_meta;

  CellClass at(std::size_t i, std::size_t j) const { return cells[i * d_axis.size() + j]; }
  /// Indices of the grid point nearest to (P, D), log distance in P.
  std::pair<std::size_t, std::size_t> nearest(double P, double D) const;
};

struct AxisSpec {
  double lo;
  double hi;
  int count;
  bool log_spaced;
  std::vector<double> values() const;
};

inline constexpr AxisSpec kDefaultPAxis{1.0, 20000.0, 120, true};
inline constexpr AxisSpec kDefaultDAxis{1.0, 50.0, 60, false};

struct RegionOptions {
  double stability_tol = 1e-9;
  double low_pm_deg = 30.0;
  BreakPoint break_point = BreakPoint::ImpedanceError;
  /// Skip the margin evaluation; stable cells are then all Stable.
  bool classify_margin = true;
  /// Worker threads; results do not depend on it.
  int jobs = 1;
};

/// Classifies each (Pgain, Dgain) cell of the impedance-gain plane.
RegionGrid stability_region(const PlantParams& p, const LoopConfig& base, const std::vector<double>& p_axis,
                            const std::vector<double>& d_axis, const RegionOptions& opt = {});

using Quadrant = std::function<bool(double P, double D)>;

/// Number of Unstable cells satisfying the predicate.
int count_unstable(const RegionGrid& g, const Quadrant& q);
/// count_unstable(b, q) - count_unstable(a, q). Throws AxisMismatchError.
int region_comparisons(const RegionGrid& a, const RegionGrid& b, const Quadrant& q);

}  // namespace zwidth
