#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nonstatic {

enum class ErrorKind {
  kParameterDomain,
  kDomain,
  kCapability,
  kUndefinedStatistics,
  kAccuracy,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base for every error raised by the library. `kind()` lets callers map
/// failures to exit codes without catching each subclass.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A model parameter violates its constraint. `constraint()` names it,
/// e.g. "c1*c2 >= 1".
class ParameterError : public Error {
 public:
  ParameterError(std::string field, std::string constraint, const std::string& message)
      : Error(ErrorKind::kParameterDomain, message),
        field_(std::move(field)),
        constraint_(std::move(constraint)) {}

  const std::string& field() const noexcept { return field_; }
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string field_;
  std::string constraint_;
};

/// An argument outside the operation's domain (t < t0, A0 < 0, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error(ErrorKind::kDomain, message) {}
};

class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& message)
      : Error(ErrorKind::kCapability, message) {}
};

/// Photon-number statistics undefined (zero mean).
class StatisticsError : public Error {
 public:
  explicit StatisticsError(const std::string& message)
      : Error(ErrorKind::kUndefinedStatistics, message) {}
};

class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& message, double estimate)
      : Error(ErrorKind::kAccuracy, message), estimate_(estimate) {}

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

}  // namespace nonstatic
