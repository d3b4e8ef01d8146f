#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sar {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class ViolationKind { NonPositiveMu, OutOfRangeKappa, OutOfRangeNu, NegativeRate, NotFinite };

struct ParameterViolation {
  ViolationKind kind;
  std::string field;
  double value;
};

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::NonPositiveMu: return "NonPositiveMu";
    case ViolationKind::OutOfRangeKappa: return "OutOfRangeKappa";
    case ViolationKind::OutOfRangeNu: return "OutOfRangeNu";
    case ViolationKind::NegativeRate: return "NegativeRate";
    case ViolationKind::NotFinite: return "NotFinite";
  }
  return "?";
}

class ParameterError : public Error {
public:
  explicit ParameterError(std::vector<ParameterViolation> v)
      : Error(describe(v)), violations_(std::move(v)) {}

  const std::vector<ParameterViolation>& violations() const noexcept { return violations_; }

private:
  static std::string describe(const std::vector<ParameterViolation>& v) {
    std::string msg = "invalid model parameters:";
    for (const auto& x : v) {
      msg += ' ';
      msg += to_string(x.kind);
      msg += '(' + x.field + '=' + std::to_string(x.value) + ')';
    }
    return msg;
  }

  std::vector<ParameterViolation> violations_;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

enum class NumericFailure {
  NoFold,
  NoUpperFold,
  WrongCase,
  Degenerate,
  NotFourRegion,
  NotAnEquilibrium,
  StepTooLarge,
  InsufficientResolution,
};

inline std::string_view to_string(NumericFailure f) {
  switch (f) {
    case NumericFailure::NoFold: return "NoFold";
    case NumericFailure::NoUpperFold: return "NoUpperFold";
    case NumericFailure::WrongCase: return "WrongCase";
    case NumericFailure::Degenerate: return "Degenerate";
    case NumericFailure::NotFourRegion: return "NotFourRegion";
    case NumericFailure::NotAnEquilibrium: return "NotAnEquilibrium";
    case NumericFailure::StepTooLarge: return "StepTooLarge";
    case NumericFailure::InsufficientResolution: return "InsufficientResolution";
  }
  return "?";
}

class NumericError : public Error {
public:
  NumericError(NumericFailure f, const std::string& detail)
      : Error(std::string(to_string(f)) + ": " + detail), failure_(f) {}

  NumericFailure failure() const noexcept { return failure_; }

private:
  NumericFailure failure_;
};

enum class ConfigFailure { MissingField, UnknownKey, TypeMismatch, BadValue, Malformed };

inline std::string_view to_string(ConfigFailure f) {
  switch (f) {
    case ConfigFailure::MissingField: return "MissingField";
    case ConfigFailure::UnknownKey: return "UnknownKey";
    case ConfigFailure::TypeMismatch: return "TypeMismatch";
    case ConfigFailure::BadValue: return "BadValue";
    case ConfigFailure::Malformed: return "Malformed";
  }
  return "?";
}

class ConfigError : public Error {
public:
  /// `keys` holds every offending key path; `line` is 0 when unknown.
  ConfigError(ConfigFailure f, std::vector<std::string> keys, int line, const std::string& detail)
      : Error(format(f, keys, line, detail)), failure_(f), keys_(std::move(keys)), line_(line) {}

  ConfigFailure failure() const noexcept { return failure_; }
  const std::vector<std::string>& keys() const noexcept { return keys_; }
  int line() const noexcept { return line_; }

private:
  static std::string format(ConfigFailure f, const std::vector<std::string>& keys, int line,
                            const std::string& detail) {
    std::string msg(to_string(f));
    if (!keys.empty()) {
      msg += " [";
      for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) msg += ", ";
        msg += keys[i];
      }
      msg += ']';
    }
    if (line > 0) msg += " at line " + std::to_string(line);
    if (!detail.empty()) msg += ": " + detail;
    return msg;
  }

  ConfigFailure failure_;
  std::vector<std::string> keys_;
  int line_;
};

class IoError : public Error {
public:
  IoError(const std::string& path, const std::string& what)
      : Error("I/O error on '" + path + "': " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

}  // namespace sar
