#pragma once

namespace zwidth {

/// Discrete PI torque controller, Pt = 0.382 beta and It = 18 beta.
struct TorquePIConfig {
  double beta = 1.0;
  double Ts = 1e-3;

  double Pt() const noexcept { return 0.382 * beta; }
  double It() const noexcept { return 18.0 * beta; }
  void validate() const;
};

enum class VcMode { Simplified, Full };

/// Positive velocity compensation added to the torque controller output.
struct VelCompConfig {
  double alpha = 0.94;
  VcMode mode = VcMode::Simplified;
  /// Feed the compensator from the averaging-filter estimate (true) or from
  /// the ideal sampled link velocity (false).
  bool filtered = true;
  void validate() const;
};

/// Outer impedance law Tl_ref = Pgain (theta_ref - thL1) - Dgain v.
struct ImpedanceConfig {
  double Pgain = 200.0;
  double Dgain = 10.0;
  void validate() const;
};

/// Velocity estimate (theta[k] - theta[k-Nav]) / (Nav Ts).
struct AveragingFilterConfig {
  int Nav = 4;
  double Ts = 1e-3;
  int counts_per_rev = 80000;
  void validate() const;
};

struct LoopConfig {
  TorquePIConfig pi;
  VelCompConfig vc;
  ImpedanceConfig imp;
  AveragingFilterConfig filt;
  bool vc_closed = true;
  bool torque_closed = true;
  bool impedance_closed = false;
  /// One-sample delay between the controller output and the motor voltage.
  bool compute_delay = false;

  double Ts() const noexcept { return pi.Ts; }
  /// Sets the sample time of every discrete block.
  void set_Ts(double Ts) noexcept {
    pi.Ts = Ts;
    filt.Ts = Ts;
  }
  /// Throws InvalidParamsError or ConfigError.
  void validate() const;
};

}  // namespace zwidth
