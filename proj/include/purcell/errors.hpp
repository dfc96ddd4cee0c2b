#pragma once

#include <stdexcept>
#include <string>

namespace purcell {

/// Base class for all typed errors thrown by this library.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  /// Stable error name, suitable for diagnostics and exit-code mapping.
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// The 3x3 force-balance system is numerically singular at this shape.
class NearSingularConfiguration : public Error {
 public:
  explicit NearSingularConfiguration(const std::string& what)
      : Error("NearSingularConfiguration", what) {}
};

/// A closed-form denominator vanished at the queried shape.
class OracleDenominatorZero : public Error {
 public:
  explicit OracleDenominatorZero(const std::string& what)
      : Error("OracleDenominatorZero", what) {}
};

/// Entry label outside {11, 12, 21, 22, 31, 32}.
class UnknownEntryLabel : public Error {
 public:
  explicit UnknownEntryLabel(const std::string& what)
      : Error("UnknownEntryLabel", what) {}
};

/// Malformed grid specification (empty, reversed, or non-uniform).
class InvalidGridSpec : public Error {
 public:
  explicit InvalidGridSpec(const std::string& what)
      : Error("InvalidGridSpec", what) {}
};

/// Malformed gait specification.
class InvalidGaitSpec : public Error {
 public:
  explicit InvalidGaitSpec(const std::string& what)
      : Error("InvalidGaitSpec", what) {}
};

/// Trajectory does not span an integer number of gait periods.
class IncompleteCycle : public Error {
 public:
  explicit IncompleteCycle(const std::string& what)
      : Error("IncompleteCycle", what) {}
};

/// Invalid run configuration; carries the offending field path.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& path, const std::string& reason)
      : Error("ConfigError", path + ": " + reason) {}
};

}  // namespace purcell
