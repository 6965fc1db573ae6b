#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dpnp {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configuration or argument that violates a documented precondition.
class InvalidConfig : public Error {
 public:
  explicit InvalidConfig(const std::string& what) : Error(what), violations_{what} {}
  explicit InvalidConfig(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }
  std::vector<std::string> violations_;
};

/// Fields, vectors or matrices whose sizes or grids do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Boundary/source data that cannot satisfy a pure-flux solvability condition.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

/// An algebraic identity that must hold was observed to fail.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dpnp
