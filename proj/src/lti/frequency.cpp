#include "zwidth/lti/frequency.hpp"

#include <cmath>
#include <memory>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "zwidth/error.hpp"

namespace zwidth {

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi >= lo) || n < 1) throw InvalidArgument("log_grid: need 0 < lo <= hi and n >= 1");
  std::vector<double> w(static_cast<std::size_t>(n));
  if (n == 1) {
    w[0] = lo;
    return w;
  }
  const double a = std::log10(lo), b = std::log10(hi);
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (n - 1));
  w.front() = lo;
  w.back() = hi;
  return w;
}

std::vector<double> analysis_grid(const TimeDomain& domain, int n, double fraction, double continuous_hi) {
  const double hi = domain.is_discrete() ? fraction * domain.nyquist() : continuous_hi;
  return log_grid(kGridLowRadS, hi, n);
}

void check_nyquist(const TimeDomain& domain, double w) {
  if (domain.is_discrete() && w > domain.nyquist() * (1.0 + 1e-12)) {
    throw FrequencyAboveNyquistError(
        fmt::format("frequency {} rad/s exceeds Nyquist {} rad/s", w, domain.nyquist()));
  }
}

ChannelResponse::ChannelResponse(const StateSpace& sys, int input, int output)
    : domain_(sys.domain()), d_(sys.D()(output, input)) {
  const auto n = sys.n_states();
  if (n == 0) return;
  if (n > 2) {
    Eigen::HessenbergDecomposition<Matrix> hd(sys.A());
    H_ = hd.matrixH();
    const Matrix Q = hd.matrixQ();
    b_ = (Q.transpose() * sys.B().col(input)).cast<std::complex<double>>();
    c_ = (sys.C().row(output) * Q).transpose().cast<std::complex<double>>();
  } else {
    H_ = sys.A();
    b_ = sys.B().col(input).cast<std::complex<double>>();
    c_ = sys.C().row(output).transpose().cast<std::complex<double>>();
  }
}

ChannelResponse::ChannelResponse(const StateSpace& sys, const std::string& input, const std::string& output)
    : ChannelResponse(sys, sys.input_index(input), sys.output_index(output)) {}

std::complex<double> ChannelResponse::operator()(double w) const {
  check_nyquist(domain_, w);
  const Eigen::Index n = H_.rows();
  if (n == 0) return d_;
  const std::complex<double> p = domain_.point(w);
  // Solve (pI - H) x = b for upper Hessenberg H by Gaussian elimination
  // with partial pivoting between adjacent rows.
  thread_local ComplexMatrix M;
  thread_local ComplexVector x;
  M.resize(n, n);
  M.noalias() = -H_.cast<std::complex<double>>();
  M.diagonal().array() += p;
  x = b_;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (std::abs(M(k + 1, k)) > std::abs(M(k, k))) {
      for (Eigen::Index j = k; j < n; ++j) std::swap(M(k, j), M(k + 1, j));
      std::swap(x(k), x(k + 1));
    }
    if (M(k, k) == 0.0) continue;
    const std::complex<double> f = M(k + 1, k) / M(k, k);
    for (Eigen::Index j = k + 1; j < n; ++j) M(k + 1, j) -= f * M(k, j);
    x(k + 1) -= f * x(k);
  }
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    std::complex<double> s = x(k);
    for (Eigen::Index j = k + 1; j < n; ++j) s -= M(k, j) * x(j);
    x(k) = s / M(k, k);
  }
  return (c_.transpose() * x)(0) + d_;
}

ResponseFn response_of(const RationalTF& g) {
  return [g](double w) { return g.at_frequency(w); };
}

ResponseFn response_of(const StateSpace& sys, int input, int output) {
  auto r = std::make_shared<ChannelResponse>(sys, input, output);
  return [r](double w) { return (*r)(w); };
}

std::vector<std::complex<double>> freq_response(const RationalTF& g, std::span<const double> w) {
  return g.freq_response(w);
}

std::vector<std::complex<double>> freq_response(const StateSpace& sys, std::span<const double> w,
                                                int input, int output) {
  ChannelResponse r(sys, input, output);
  std::vector<std::complex<double>> out;
  out.reserve(w.size());
  for (double wi : w) out.push_back(r(wi));
  return out;
}

}  // namespace zwidth
