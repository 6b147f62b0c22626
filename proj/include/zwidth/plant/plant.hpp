#pragma once

#include <string>
#include <vector>

#include "zwidth/lti/polynomial.hpp"
#include "zwidth/lti/rational_tf.hpp"
#include "zwidth/lti/state_space.hpp"

namespace zwidth {

/// Physical parameters of the motor, harmonic drive, link and leg.
/// Defaults are the extended-leg values.
struct PlantParams {
  double Jm = 5.72e-5;   // rotor + gearbox inertia, kg m^2
  double Khd = 8077.0;   // gearbox stiffness, Nm/rad
  double Dhd = 16.56;    // gearbox damping, Nms/rad
  double Bm = 0.0015;    // rotor viscous friction, Nms/rad
  double JL1 = 1e-4;     // link inertia, kg m^2
  double BL1 = 0.0;      // link viscous friction, Nms/rad
  double JL2 = 0.439;    // leg inertia, kg m^2
  double BL2 = 0.756;    // leg viscous friction, Nms/rad
  double KL2 = 11.2;     // gravity spring, Nm/rad
  double Kp = 1923.0;    // leg flexibility stiffness, Nm/rad
  double Dp = 7.56;      // leg flexibility damping, Nms/rad
  double L = 2.02e-3;    // winding inductance, H
  double R = 3.32;       // winding resistance, ohm
  double kt = 0.19;      // torque constant, Nm/A
  double kw = 0.19;      // back-emf constant, Vs/rad
  double N = 100.0;      // gear ratio

  static PlantParams extended() { return {}; }
  static PlantParams retracted() {
    PlantParams p;
    p.JL2 = 0.129;
    p.KL2 = 7.17;
    return p;
  }

  /// Throws InvalidParamsError naming the first offending field.
  void validate() const;

  /// Field names in declaration order, for config parsing.
  static const std::vector<std::string>& field_names();
  double& field(const std::string& name);
  double field(const std::string& name) const;
};

namespace plant_io {
inline const std::vector<std::string> kInputs = {"Vm", "Tdist", "Tfr"};
inline const std::vector<std::string> kOutputs = {"Tl", "thL1", "dthL1", "thm", "dthm", "thL2", "dthL2"};
}  // namespace plant_io

/// Continuous 7-state model with states [Im, thm, dthm, thL1, dthL1, thL2,
/// dthL2]. Tdist acts on the leg inertia JL2, Tfr on the rotor inertia Jm.
/// Tl = Khd (thm/N - thL1) + Dhd (dthm/N - dthL1).
StateSpace build_plant(const PlantParams& p);

/// Polynomials of the symbolic voltage-to-torque transfer function.
struct LoadPolynomials {
  Polynomial p1, q1, q2, q3;
};
LoadPolynomials build_p1q1q2q3(const PlantParams& p);

/// Vm -> Tl with the velocity feedback Vm += vc(s) * dthL1 closed:
///   kt (Dhd s + Khd) p1 / (N (p1 q1 + (q2 - vc s) q3)).
/// `vc` may be improper (the full cancelling compensator is a polynomial).
RationalTF gtvc_rational(const PlantParams& p, const RationalTF& vc);

/// q2 * den(vc) - num(vc) * s. Vanishes for the fully cancelling compensator.
Polynomial vc_residual(const PlantParams& p, const RationalTF& vc);

}  // namespace zwidth
