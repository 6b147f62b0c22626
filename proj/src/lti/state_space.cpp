#include "zwidth/lti/state_space.hpp"

#include <algorithm>
#include <set>

#include <Eigen/LU>
#include <fmt/format.h>

#include "zwidth/error.hpp"

namespace zwidth {
namespace {

std::vector<std::string> numbered(const char* prefix, Eigen::Index n) {
  std::vector<std::string> v;
  for (Eigen::Index i = 0; i < n; ++i) v.push_back(fmt::format("{}{}", prefix, i));
  return v;
}

void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw DimensionError(fmt::format("duplicate {} label '{}'", what, l));
  }
}

int find_label(const std::vector<std::string>& labels, const std::string& l, const char* what) {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) throw UnknownLabelError(fmt::format("unknown {} label '{}'", what, l));
  return static_cast<int>(it - labels.begin());
}

}  // namespace

StateSpace::StateSpace(Matrix A, Matrix B, Matrix C, Matrix D, TimeDomain domain,
                       std::vector<std::string> input_labels,
                       std::vector<std::string> output_labels)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), D_(std::move(D)),
      domain_(domain), in_(std::move(input_labels)), out_(std::move(output_labels)) {
  const auto n = A_.rows();
  if (A_.cols() != n) throw DimensionError("A must be square");
  if (B_.rows() != n) throw DimensionError(fmt::format("B has {} rows, expected {}", B_.rows(), n));
  if (C_.cols() != n) throw DimensionError(fmt::format("C has {} cols, expected {}", C_.cols(), n));
  if (D_.rows() != C_.rows() || D_.cols() != B_.cols()) {
    throw DimensionError(fmt::format("D is {}x{}, expected {}x{}", D_.rows(), D_.cols(), C_.rows(), B_.cols()));
  }
  if (static_cast<Eigen::Index>(in_.size()) != B_.cols()) throw DimensionError("input label count must match B columns");
  if (static_cast<Eigen::Index>(out_.size()) != C_.rows()) throw DimensionError("output label count must match C rows");
  require_unique(in_, "input");
  require_unique(out_, "output");
}

StateSpace::StateSpace(Matrix A, Matrix B, Matrix C, Matrix D, TimeDomain domain)
    : StateSpace(A, B, C, D, domain, numbered("u", B.cols()), numbered("y", C.rows())) {}

StateSpace StateSpace::static_gain(Matrix D, TimeDomain domain,
                                   std::vector<std::string> input_labels,
                                   std::vector<std::string> output_labels) {
  const auto p = D.rows(), m = D.cols();
  return StateSpace(Matrix(0, 0), Matrix(0, m), Matrix(p, 0), std::move(D), domain,
                    std::move(input_labels), std::move(output_labels));
}

int StateSpace::input_index(const std::string& label) const { return find_label(in_, label, "input"); }
int StateSpace::output_index(const std::string& label) const { return find_label(out_, label, "output"); }

bool StateSpace::has_input(const std::string& label) const noexcept {
  return std::find(in_.begin(), in_.end(), label) != in_.end();
}
bool StateSpace::has_output(const std::string& label) const noexcept {
  return std::find(out_.begin(), out_.end(), label) != out_.end();
}

StateSpace StateSpace::select(std::span<const std::string> inputs,
                              std::span<const std::string> outputs) const {
  Matrix B(n_states(), static_cast<Eigen::Index>(inputs.size()));
  Matrix D(static_cast<Eigen::Index>(outputs.size()), static_cast<Eigen::Index>(inputs.size()));
  Matrix C(static_cast<Eigen::Index>(outputs.size()), n_states());
  for (std::size_t j = 0; j < inputs.size(); ++j) B.col(static_cast<Eigen::Index>(j)) = B_.col(input_index(inputs[j]));
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    const int oi = output_index(outputs[i]);
    C.row(static_cast<Eigen::Index>(i)) = C_.row(oi);
    for (std::size_t j = 0; j < inputs.size(); ++j)
      D(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = D_(oi, input_index(inputs[j]));
  }
  return StateSpace(A_, std::move(B), std::move(C), std::move(D), domain_,
                    std::vector<std::string>(inputs.begin(), inputs.end()),
                    std::vector<std::string>(outputs.begin(), outputs.end()));
}

StateSpace StateSpace::channel(const std::string& input, const std::string& output) const {
  const std::string in[] = {input};
  const std::string out[] = {output};
  return select(in, out);
}

ComplexMatrix StateSpace::evaluate(std::complex<double> p) const {
  const auto n = n_states();
  ComplexMatrix out = D_.cast<std::complex<double>>();
  if (n == 0) return out;
  ComplexMatrix M = -A_.cast<std::complex<double>>();
  M.diagonal().array() += p;
  ComplexMatrix X = M.partialPivLu().solve(B_.cast<std::complex<double>>());
  out += C_.cast<std::complex<double>>() * X;
  return out;
}

bool StateSpace::is_stable(double tol) const {
  for (const auto& ev : poles()) {
    if (domain_.is_discrete() ? std::abs(ev) >= 1.0 - tol : ev.real() >= -tol) return false;
  }
  return true;
}

}  // namespace zwidth
