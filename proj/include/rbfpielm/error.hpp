#pragma once

#include <stdexcept>
#include <string>

namespace rbfpielm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Derivative order above what the Gaussian kernel supports.
class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

/// Fewer collocation conditions than unknown coefficients.
class UnderdeterminedSystem : public Error {
 public:
  using Error::Error;
};

/// Non-finite matrix or right-hand-side entry during assembly.
class AssemblyFailure : public Error {
 public:
  using Error::Error;
};

/// SVD did not converge.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Every singular value fell under the truncation threshold.
class RankZero : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration or sweep description; carries a source position.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& message, int line = 0, int column = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message
                       : message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace rbfpielm
