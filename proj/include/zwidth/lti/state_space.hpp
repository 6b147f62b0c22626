#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "zwidth/lti/linalg.hpp"
#include "zwidth/lti/time_domain.hpp"

namespace zwidth {

/// Labeled state-space model x' = Ax + Bu, y = Cx + Du (x' is dx/dt or
/// x[k+1]). Immutable after construction; every constructor validates
/// dimensions and label uniqueness.
class StateSpace {
 public:
  StateSpace(Matrix A, Matrix B, Matrix C, Matrix D, TimeDomain domain,
             std::vector<std::string> input_labels,
             std::vector<std::string> output_labels);

  /// Unlabeled convenience form; labels become u0.., y0...
  StateSpace(Matrix A, Matrix B, Matrix C, Matrix D, TimeDomain domain);

  /// Memoryless gain y = D u.
  static StateSpace static_gain(Matrix D, TimeDomain domain,
                                std::vector<std::string> input_labels,
                                std::vector<std::string> output_labels);

  const Matrix& A() const noexcept { return A_; }
  const Matrix& B() const noexcept { return B_; }
  const Matrix& C() const noexcept { return C_; }
  const Matrix& D() const noexcept { return D_; }
  const TimeDomain& domain() const noexcept { return domain_; }
  const std::vector<std::string>& input_labels() const noexcept { return in_; }
  const std::vector<std::string>& output_labels() const noexcept { return out_; }

  int n_states() const noexcept { return static_cast<int>(A_.rows()); }
  int n_inputs() const noexcept { return static_cast<int>(B_.cols()); }
  int n_outputs() const noexcept { return static_cast<int>(C_.rows()); }

  /// Index of a label; throws UnknownLabelError.
  int input_index(const std::string& label) const;
  int output_index(const std::string& label) const;
  bool has_input(const std::string& label) const noexcept;
  bool has_output(const std::string& label) const noexcept;

  /// Sub-system keeping the listed channels in the listed order.
  StateSpace select(std::span<const std::string> inputs,
                    std::span<const std::string> outputs) const;
  /// Single-input single-output channel.
  StateSpace channel(const std::string& input, const std::string& output) const;

  /// C (pI - A)^-1 B + D at an arbitrary complex point p.
  ComplexMatrix evaluate(std::complex<double> p) const;

  Spectrum poles() const { return eigenvalues(A_); }
  /// Strict stability: Re < -tol (continuous) or |z| < 1 - tol (discrete).
  bool is_stable(double tol = 1e-9) const;

 private:
  Matrix A_, B_, C_, D_;
  TimeDomain domain_;
  std::vector<std::string> in_, out_;
};

}  // namespace zwidth
