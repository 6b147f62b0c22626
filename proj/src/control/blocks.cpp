#include "zwidth/control/blocks.hpp"

#include <cmath>

#include "zwidth/error.hpp"

namespace zwidth {

void TorquePIConfig::validate() const {
  if (!(beta > 0) || !std::isfinite(beta)) throw InvalidParamsError("beta", "must be > 0");
  if (!(Ts > 0) || !std::isfinite(Ts)) throw InvalidParamsError("Ts", "must be > 0");
}

void VelCompConfig::validate() const {
  if (!(alpha >= 0) || !std::isfinite(alpha)) throw InvalidParamsError("alpha", "must be >= 0");
}

void ImpedanceConfig::validate() const {
  if (!(Pgain >= 0) || !std::isfinite(Pgain)) throw InvalidParamsError("Pgain", "must be >= 0");
  if (!(Dgain >= 0) || !std::isfinite(Dgain)) throw InvalidParamsError("Dgain", "must be >= 0");
}

void AveragingFilterConfig::validate() const {
  if (Nav < 1) throw InvalidParamsError("Nav", "must be >= 1");
  if (!(Ts > 0) || !std::isfinite(Ts)) throw InvalidParamsError("Ts", "must be > 0");
  if (counts_per_rev < 1) throw InvalidParamsError("counts_per_rev", "must be >= 1");
}

void LoopConfig::validate() const {
  pi.validate();
  vc.validate();
  imp.validate();
  filt.validate();
  if (pi.Ts != filt.Ts) throw ConfigError("torque and filter sample times differ");
  if (impedance_closed && !torque_closed) throw ConfigError("impedance loop closed requires the torque loop closed");
  if (vc_closed && vc.mode == VcMode::Full)
    throw ConfigError("full velocity compensation is improper and cannot be used in the sampled loop");
}

RationalTF pi_tf(double Pt, double It, double Ts) {
  const double k = Pt + It * Ts;
  return RationalTF(Polynomial{k, -Pt}, Polynomial{1.0, -1.0}, TimeDomain::discrete(Ts)).cancelled();
}

RationalTF pi_tf(const TorquePIConfig& cfg) {
  cfg.validate();
  return pi_tf(cfg.Pt(), cfg.It(), cfg.Ts);
}

StateSpace pi_ss(const TorquePIConfig& cfg, const std::string& input, const std::string& output) {
  cfg.validate();
  const double ItTs = cfg.It() * cfg.Ts;
  return StateSpace(Matrix::Ones(1, 1), Matrix::Constant(1, 1, ItTs), Matrix::Ones(1, 1),
                    Matrix::Constant(1, 1, cfg.Pt() + ItTs), TimeDomain::discrete(cfg.Ts), {input}, {output});
}

double vc_simplified_gain(const PlantParams& p, double alpha) { return alpha * p.N * (p.R * p.Bm + p.kt * p.kw) / p.kt; }

RationalTF vc_gain(const PlantParams& p, const VelCompConfig& cfg) {
  p.validate();
  cfg.validate();
  const auto cont = TimeDomain::continuous();
  if (cfg.mode == VcMode::Simplified) return RationalTF::gain(vc_simplified_gain(p, cfg.alpha), cont);
  const Polynomial num = (p.N / p.kt) * (Polynomial{p.L, p.R} * Polynomial{p.Jm, p.Bm}) + Polynomial{p.N * p.kw};
  return RationalTF(num, Polynomial{1.0}, cont);
}

RationalTF averaging_filter_tf(const AveragingFilterConfig& cfg) {
  cfg.validate();
  std::vector<double> num(static_cast<std::size_t>(cfg.Nav) + 1, 0.0), den(num.size(), 0.0);
  num.front() = 1.0;
  num.back() = -1.0;
  den.front() = cfg.Nav * cfg.Ts;
  return RationalTF(Polynomial(num), Polynomial(den), TimeDomain::discrete(cfg.Ts));
}

StateSpace averaging_filter_ss(const AveragingFilterConfig& cfg, const std::string& input, const std::string& output) {
  cfg.validate();
  const int n = cfg.Nav;
  const double g = 1.0 / (n * cfg.Ts);
  Matrix A = Matrix::Zero(n, n), B = Matrix::Zero(n, 1), C = Matrix::Zero(1, n);
  B(0, 0) = 1.0;
  for (int j = 1; j < n; ++j) A(j, j - 1) = 1.0;
  C(0, n - 1) = -g;
  return StateSpace(std::move(A), std::move(B), std::move(C), Matrix::Constant(1, 1, g), TimeDomain::discrete(cfg.Ts),
                    {input}, {output});
}

double impedance_law(const ImpedanceConfig& cfg, double position_error, double velocity) {
  return cfg.Pgain * position_error - cfg.Dgain * velocity;
}

double inverse_dynamics_ff(const PlantParams& p, double m, double l_com, double thL2, double ddtheta_ref) {
  if (!(m >= 0)) throw InvalidParamsError("m", "must be >= 0");
  if (!(l_com >= 0)) throw InvalidParamsError("l_com", "must be >= 0");
  return (p.JL1 + p.JL2) * ddtheta_ref + m * kGravity * l_com * std::sin(thL2);
}

}  // namespace zwidth
