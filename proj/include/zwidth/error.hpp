#pragma once

#include <stdexcept>
#include <string>

namespace zwidth {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by numerical routines (root finding, eigenvalues, expm) that could
/// not produce a trustworthy result. The CLI maps it to exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Raised when a caller-supplied value violates a documented precondition.
/// The CLI maps every subclass to exit code 2.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomialError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DomainMismatchError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DimensionError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class UnknownLabelError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ImproperSystemError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class FrequencyAboveNyquistError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidParamsError : public InvalidArgument {
 public:
  InvalidParamsError(std::string field, const std::string& what)
      : InvalidArgument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Malformed configuration text; line and column are 1-based, 0 when the
/// text came from a command-line override.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& origin, int line, int column, const std::string& what)
      : ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_, column_;
};

class SampleTimeMismatchError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InsufficientDurationError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class AxisMismatchError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Interconnection with a singular algebraic loop (I - D K not invertible).
class IllPosedLoopError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A step trace that never stays inside its settling band.
class NonConvergentError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace zwidth
