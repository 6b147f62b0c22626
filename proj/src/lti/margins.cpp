#include "zwidth/lti/margins.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "zwidth/error.hpp"

namespace zwidth {
namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

template <class F>
double bisect(const F& f, double lo, double hi, double flo, double tol) {
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

MarginReport margins(const ResponseFn& loop, const TimeDomain& domain, const MarginOptions& opt) {
  const auto w = analysis_grid(domain, opt.grid_points, 1.0, opt.continuous_hi_rad_s);
  std::vector<std::complex<double>> L(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) L[i] = loop(w[i]);

  const auto mag_err = [&](double x) { return std::abs(loop(x)) - 1.0; };
  const auto imag_part = [&](double x) { return loop(x).imag(); };

  MarginReport rep{std::numeric_limits<double>::infinity(), std::nullopt, std::nullopt, std::nullopt};

  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const double a = std::abs(L[i]) - 1.0, b = std::abs(L[i + 1]) - 1.0;
    if ((a < 0.0) != (b < 0.0)) {
      const double wc = bisect(mag_err, w[i], w[i + 1], a, opt.bisection_tol_rad_s);
      const double pm = 180.0 - std::abs(std::arg(loop(wc))) * kRadToDeg;
      if (!rep.phase_margin_deg || pm < *rep.phase_margin_deg) {
        rep.phase_margin_deg = pm;
        rep.gain_crossover_hz = wc / (2.0 * std::numbers::pi);
      }
    }
    const double ia = L[i].imag(), ib = L[i + 1].imag();
    if ((ia < 0.0) != (ib < 0.0) && (L[i].real() < 0.0 || L[i + 1].real() < 0.0)) {
      const double wp = bisect(imag_part, w[i], w[i + 1], ia, opt.bisection_tol_rad_s);
      const auto Lp = loop(wp);
      if (Lp.real() < 0.0) {
        const double gm = -20.0 * std::log10(std::abs(Lp));
        if (gm < rep.gain_margin_db) {
          rep.gain_margin_db = gm;
          rep.phase_crossover_hz = wp / (2.0 * std::numbers::pi);
        }
      }
    }
  }
  // A discrete loop is real at Nyquist; a negative value there is a crossing.
  if (domain.is_discrete()) {
    const auto& Ln = L.back();
    if (Ln.real() < 0.0 && std::abs(Ln.imag()) <= 1e-9 * std::abs(Ln)) {
      const double gm = -20.0 * std::log10(std::abs(Ln));
      if (gm < rep.gain_margin_db) {
        rep.gain_margin_db = gm;
        rep.phase_crossover_hz = w.back() / (2.0 * std::numbers::pi);
      }
    }
  }
  return rep;
}

MarginReport margins(const RationalTF& loop, const MarginOptions& opt) {
  if (!loop.is_proper()) throw ImproperSystemError("margins: loop transfer function is improper");
  return margins(response_of(loop), loop.domain(), opt);
}

MarginReport margins(const StateSpace& loop, const MarginOptions& opt) {
  return margins(response_of(loop), loop.domain(), opt);
}

}  // namespace zwidth
