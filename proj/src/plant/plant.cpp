#include "zwidth/plant/plant.hpp"

#include <cmath>
#include <utility>

#include "zwidth/error.hpp"

namespace zwidth {

namespace {

struct FieldRule {
  const char* name;
  double PlantParams::*member;
  bool strictly_positive;
};

constexpr FieldRule kRules[] = {
    {"Jm", &PlantParams::Jm, true},   {"Khd", &PlantParams::Khd, true}, {"Dhd", &PlantParams::Dhd, false},
    {"Bm", &PlantParams::Bm, false},  {"JL1", &PlantParams::JL1, true}, {"BL1", &PlantParams::BL1, false},
    {"JL2", &PlantParams::JL2, true}, {"BL2", &PlantParams::BL2, false}, {"KL2", &PlantParams::KL2, false},
    {"Kp", &PlantParams::Kp, true},   {"Dp", &PlantParams::Dp, false},  {"L", &PlantParams::L, true},
    {"R", &PlantParams::R, true},     {"kt", &PlantParams::kt, true},   {"kw", &PlantParams::kw, true},
    {"N", &PlantParams::N, true},
};

const FieldRule& rule(const std::string& name) {
  for (const auto& r : kRules)
    if (name == r.name) return r;
  throw ConfigError("unknown plant parameter '" + name + "'");
}

}  // namespace

void PlantParams::validate() const {
  for (const auto& r : kRules) {
    const double v = this->*r.member;
    if (!std::isfinite(v)) throw InvalidParamsError(r.name, "must be finite");
    if (r.strictly_positive && !(v > 0)) throw InvalidParamsError(r.name, "must be > 0");
    if (!r.strictly_positive && v < 0) throw InvalidParamsError(r.name, "must be >= 0");
  }
}

const std::vector<std::string>& PlantParams::field_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& r : kRules) out.emplace_back(r.name);
    return out;
  }();
  return names;
}

double& PlantParams::field(const std::string& name) { return this->*rule(name).member; }
double PlantParams::field(const std::string& name) const { return this->*rule(name).member; }

StateSpace build_plant(const PlantParams& p) {
  p.validate();
  const double N = p.N;
  Matrix A = Matrix::Zero(7, 7), B = Matrix::Zero(7, 3), C = Matrix::Zero(7, 7);

  A(0, 0) = -p.R / p.L;
  A(0, 2) = -p.kw / p.L;
  B(0, 0) = 1.0 / p.L;

  A(1, 2) = 1.0;
  A(2, 0) = p.kt / p.Jm;
  A(2, 1) = -p.Khd / (N * N) / p.Jm;
  A(2, 2) = -(p.Bm + p.Dhd / (N * N)) / p.Jm;
  A(2, 3) = p.Khd / N / p.Jm;
  A(2, 4) = p.Dhd / N / p.Jm;
  B(2, 2) = 1.0 / p.Jm;

  A(3, 4) = 1.0;
  A(4, 1) = p.Khd / N / p.JL1;
  A(4, 2) = p.Dhd / N / p.JL1;
  A(4, 3) = -(p.Khd + p.Kp) / p.JL1;
  A(4, 4) = -(p.Dhd + p.Dp + p.BL1) / p.JL1;
  A(4, 5) = p.Kp / p.JL1;
  A(4, 6) = p.Dp / p.JL1;

  A(5, 6) = 1.0;
  A(6, 3) = p.Kp / p.JL2;
  A(6, 4) = p.Dp / p.JL2;
  A(6, 5) = -(p.Kp + p.KL2) / p.JL2;
  A(6, 6) = -(p.Dp + p.BL2) / p.JL2;
  B(6, 1) = 1.0 / p.JL2;

  C(0, 1) = p.Khd / N;
  C(0, 2) = p.Dhd / N;
  C(0, 3) = -p.Khd;
  C(0, 4) = -p.Dhd;
  C(1, 3) = 1.0;
  C(2, 4) = 1.0;
  C(3, 1) = 1.0;
  C(4, 2) = 1.0;
  C(5, 5) = 1.0;
  C(6, 6) = 1.0;

  return StateSpace(std::move(A), std::move(B), std::move(C), Matrix::Zero(7, 3), TimeDomain::continuous(),
                    plant_io::kInputs, plant_io::kOutputs);
}

LoadPolynomials build_p1q1q2q3(const PlantParams& p) {
  p.validate();
  const double N = p.N;
  const Polynomial leg{p.JL2, p.BL2, p.KL2};
  const Polynomial link{p.JL1, p.BL1, 0.0};
  const Polynomial flex{p.Dp, p.Kp};
  const Polynomial elec{p.L, p.R};
  const Polynomial gear{p.Dhd, p.Khd};
  const Polynomial s = Polynomial::x();

  LoadPolynomials out;
  out.p1 = leg * link + (leg + link) * flex;
  out.q1 = elec * (Polynomial{p.Jm, p.Bm, 0.0} + gear * (1.0 / (N * N))) + s * (p.kt * p.kw);
  out.q2 = (N / p.kt) * (elec * Polynomial{p.Jm, p.Bm, 0.0}) + s * (N * p.kw);
  out.q3 = (p.kt / N) * (Polynomial{p.JL2, p.BL2 + p.Dp, p.Kp + p.KL2} * gear);
  return out;
}

Polynomial vc_residual(const PlantParams& p, const RationalTF& vc) {
  if (!vc.domain().is_continuous()) throw DomainMismatchError("gtvc_rational: vc must be continuous");
  const auto poly = build_p1q1q2q3(p);
  return poly.q2 * vc.denominator() - vc.numerator() * Polynomial::x();
}

RationalTF gtvc_rational(const PlantParams& p, const RationalTF& vc) {
  const auto poly = build_p1q1q2q3(p);
  const Polynomial& dv = vc.denominator();
  const Polynomial num = (p.kt * (Polynomial{p.Dhd, p.Khd} * poly.p1)) * dv;
  const Polynomial den = p.N * (poly.p1 * poly.q1 * dv + vc_residual(p, vc) * poly.q3);
  return RationalTF(num, den, TimeDomain::continuous());
}

}  // namespace zwidth
