#pragma once

#include <stdexcept>
#include <string>

namespace cpcool {

/// Input outside the mathematical domain of an operation (negative distance,
/// negative temperature, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed to reach its requested accuracy.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved_tolerance)
      : std::runtime_error(what), achieved_tolerance_(achieved_tolerance) {}

  double achieved_tolerance() const noexcept { return achieved_tolerance_; }

 private:
  double achieved_tolerance_;
};

/// Parameters sit on a singular manifold of a closed form or linear system.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration text; carries the 1-based line number (0 when the error
/// is not tied to a line, e.g. a cross-key conflict).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace cpcool
